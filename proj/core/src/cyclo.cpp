#include "green/cyclo.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace green {

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  int dn = (int)num.size() - 1;
  int dd = (int)den.size() - 1;
  assert(dd >= 0 && den[dd] == 1);  // monic divisors only
  std::vector<Int> quo(dn - dd + 1, 0);
  for (int i = dn; i >= dd; --i) {
    Int f = num[i];
    if (f == 0) continue;
    quo[i - dd] = f;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
  }
  for (const Int& c : num) assert(c == 0);
  return quo;
}

std::vector<Int> cyclotomic(int n) {
  // Phi_n = (T^n - 1) / prod_{d | n, d < n} Phi_d.
  std::vector<Int> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = poly_div_exact(std::move(p), cyclotomic(d));
  }
  return p;
}

void trim(std::vector<Rat>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

CycField::CycField(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("root-of-unity order must be positive");
  phi_ = cyclotomic(n);
  deg_ = (int)phi_.size() - 1;
  qpow_.resize(n_);
  for (int e = 0; e < n_; ++e) {
    std::vector<Rat> p(e + 1, Rat(0));
    p[e] = 1;
    p = reduce(std::move(p));
    qpow_[e] = std::move(p);
  }
}

std::vector<Rat> CycField::reduce(std::vector<Rat> p) const {
  trim(p);
  while ((int)p.size() > deg_) {
    int i = (int)p.size() - 1;
    Rat f = p[i];
    for (int j = 0; j <= deg_; ++j) p[i - deg_ + j] -= f * phi_[j];
    trim(p);
  }
  p.resize(deg_, Rat(0));
  return p;
}

CycNum CycField::zero() const { return CycNum(this, std::vector<Rat>(deg_, Rat(0))); }

CycNum CycField::one() const { return from_rat(Rat(1)); }

CycNum CycField::from_rat(const Rat& r) const {
  std::vector<Rat> c(deg_, Rat(0));
  c[0] = r;
  return CycNum(this, std::move(c));
}

CycNum CycField::from_coeffs(std::vector<Rat> c) const {
  if ((int)c.size() != deg_) throw std::invalid_argument("coefficient vector has wrong length");
  for (Rat& r : c) r.canonicalize();
  return CycNum(this, std::move(c));
}

CycNum CycField::q_power(long e) const {
  long r = e % n_;
  if (r < 0) r += n_;
  return CycNum(this, qpow_[r]);
}

CycNum CycField::q_int(long i) const {
  if (i < 0) throw std::invalid_argument("(i)_q needs i >= 0");
  CycNum s = zero();
  for (long j = 0; j < i; ++j) s += q_power(j);
  return s;
}

CycNum CycField::alpha(long i, long l) const {
  return q_int(i) * (one() - q_power(i - l));
}

bool CycNum::is_zero() const {
  for (const Rat& r : c_)
    if (r != 0) return false;
  return true;
}

bool CycNum::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (Rat& x : r.c_) x = -x;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  size_t d = c_.size();
  std::vector<Rat> p(2 * d - 1, Rat(0));
  for (size_t i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      p[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = F_->reduce(std::move(p));
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // Extended Euclid in Q[T] for gcd(a, Phi_n) = 1.
  std::vector<Rat> r0(F_->phi_.begin(), F_->phi_.end());
  std::vector<Rat> r1 = c_;
  trim(r1);
  std::vector<Rat> s0{};          // coefficient of a in r0
  std::vector<Rat> s1{Rat(1)};    // coefficient of a in r1
  while (true) {
    // r1 is nonzero here; divide r0 by r1.
    std::vector<Rat> quo(std::max<size_t>(1, r0.size() - r1.size() + 1), Rat(0));
    std::vector<Rat> rem = r0;
    int dd = (int)r1.size() - 1;
    while ((int)rem.size() - 1 >= dd && !rem.empty()) {
      int dr = (int)rem.size() - 1;
      Rat f = rem[dr] / r1[dd];
      quo[dr - dd] += f;
      for (int j = 0; j <= dd; ++j) rem[dr - dd + j] -= f * r1[j];
      trim(rem);
      if (rem.empty()) break;
    }
    // s_new = s0 - quo * s1
    std::vector<Rat> snew(std::max(s0.size(), quo.size() + s1.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) snew[i] += s0[i];
    for (size_t i = 0; i < quo.size(); ++i) {
      if (quo[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= quo[i] * s1[j];
    }
    trim(snew);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
    if (r1.empty()) break;
  }
  // r0 is a nonzero constant times the gcd; gcd is 1 since Phi_n is irreducible.
  assert(r0.size() == 1);
  Rat lead = r0[0];
  for (Rat& x : s0) x /= lead;
  return CycNum(F_, F_->reduce(std::move(s0)));
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inverse(); }

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum r = F_->one();
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

bool CycNum::operator<(const CycNum& o) const {
  for (size_t i = 0; i < c_.size(); ++i) {
    int c = cmp(c_[i], o.c_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string CycNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str();
    if (i == 1) os << "*q";
    if (i > 1) os << "*q^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

}  // namespace green
