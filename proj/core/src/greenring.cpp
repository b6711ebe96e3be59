#include "green/greenring.hpp"

#include <cassert>
#include <deque>
#include <sstream>

namespace green {

int c_half(int t) { return (t + 1) / 2; }

Int binom(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return r;
}

bool Monomial::operator==(const Monomial& o) const {
  return xe == o.xe && ye == o.ye && zp == o.zp && zm == o.zm && w == o.w;
}

bool Monomial::operator<(const Monomial& o) const {
  if (xe != o.xe) return xe < o.xe;
  if (ye != o.ye) return ye < o.ye;
  if (zp != o.zp) return zp < o.zp;
  if (zm != o.zm) return zm < o.zm;
  return w < o.w;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  r.xe += o.xe;
  r.ye += o.ye;
  r.zp += o.zp;
  r.zm += o.zm;
  for (const auto& [k, e] : o.w) r.w[k] += e;
  return r;
}

std::string Monomial::str() const {
  std::ostringstream os;
  auto pw = [&](const std::string& v, int e) {
    if (e == 0) return;
    os << v;
    if (e > 1) os << "^" << e;
  };
  pw("x", xe);
  pw("y", ye);
  pw("z+", zp);
  pw("z-", zm);
  for (const auto& [k, e] : w) {
    os << "w_{" << k.first << "," << k.second.str() << "}";
    if (e > 1) os << "^" << e;
  }
  std::string s = os.str();
  return s.empty() ? "1" : s;
}

RingElement RingElement::mono(const Monomial& m, const Int& c) {
  RingElement r;
  r.add_term(m, c);
  return r;
}

RingElement RingElement::var_x(int e) {
  Monomial m;
  m.xe = e;
  return mono(m);
}

RingElement RingElement::var_y(int e) {
  Monomial m;
  m.ye = e;
  return mono(m);
}

RingElement RingElement::var_z(int sign, int e) {
  Monomial m;
  (sign > 0 ? m.zp : m.zm) = e;
  return mono(m);
}

RingElement RingElement::var_w(int m, const EtaParam& eta) {
  Monomial mo;
  mo.w[{m, eta}] = 1;
  return mono(mo);
}

void RingElement::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) t_.erase(it);
}

RingElement& RingElement::operator+=(const RingElement& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

RingElement RingElement::operator+(const RingElement& o) const {
  RingElement r = *this;
  r += o;
  return r;
}

RingElement RingElement::operator-(const RingElement& o) const {
  RingElement r = *this;
  r -= o;
  return r;
}

RingElement RingElement::operator-() const {
  RingElement r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

RingElement RingElement::operator*(const RingElement& o) const {
  RingElement r;
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

RingElement RingElement::scaled(const Int& c) const {
  RingElement r;
  if (c == 0) return r;
  for (const auto& [m, cf] : t_) r.t_.emplace(m, cf * c);
  return r;
}

std::string RingElement::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print highest monomials first for readability.
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const Int& c = it->second;
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string ms = it->first.str();
    if (a != 1 || ms == "1") {
      os << a.get_str();
      if (ms != "1") os << "*";
    }
    if (ms != "1") os << ms;
  }
  return os.str();
}

Presentation::Presentation(int n) : n_(n) {
  if (n < 3) throw RangeError("presentation needs n >= 3");
  // f1 = sum_{i=0}^{c(n-2)} (-1)^i C(n-1-i, i) x^i y^{n-1-2i}
  for (int i = 0; i <= c_half(n - 2); ++i) {
    Monomial m;
    m.xe = i;
    m.ye = n - 1 - 2 * i;
    f1_.add_term(m, (i % 2 ? -1 : 1) * binom(n - 1 - i, i));
  }
  // f2 = sum_{i=0}^{c(n-1)} (-1)^i (n/(n-i)) C(n-i, i) x^i y^{n-2i} - 2
  for (int i = 0; i <= c_half(n - 1); ++i) {
    Monomial m;
    m.xe = i;
    m.ye = n - 2 * i;
    Int num = Int(n) * binom(n - i, i);
    assert(num % (n - i) == 0);
    f2_.add_term(m, (i % 2 ? -1 : 1) * (num / (n - i)));
  }
  f2_.add_term(Monomial{}, -2);
  // f3 = sum_{i=1}^{c(n-2)} (-1)^{i-1} C(n-i-2, i-1) x^{i+1} y^{n-1-2i}
  for (int i = 1; i <= c_half(n - 2); ++i) {
    Monomial m;
    m.xe = i + 1;
    m.ye = n - 1 - 2 * i;
    f3_.add_term(m, (i % 2 ? 1 : -1) * binom(n - i - 2, i - 1));
  }
  // f4 = sum_{i=1}^{c(n-1)} (-1)^{i-1} C(n-i-1, i-1) x^i y^{n-2i}
  for (int i = 1; i <= c_half(n - 1); ++i) {
    Monomial m;
    m.xe = i;
    m.ye = n - 2 * i;
    f4_.add_term(m, (i % 2 ? 1 : -1) * binom(n - i - 1, i - 1));
  }
  r2_rhs_ = RingElement::one() +
            f1_ * (RingElement::var_y().scaled(2) + f3_.scaled(4));
  r8_rhs_ = RingElement::var_y(2 * n - 1) - f1_ * f2_;
  assert(r8_rhs_.terms().empty() ||
         r8_rhs_.terms().rbegin()->first.ye <= 2 * n - 2);
  f1_tail_ = f1_ - RingElement::var_y(n - 1);
}

const RingElement& Presentation::f(int k) const {
  switch (k) {
    case 1: return f1_;
    case 2: return f2_;
    case 3: return f3_;
    case 4: return f4_;
  }
  throw RangeError("f index must be 1..4");
}

std::optional<RingElement> Presentation::reduce_monomial(const Monomial& mo) const {
  const int n = n_;
  // R1: x^n -> 1
  if (mo.xe >= n) {
    Monomial m2 = mo;
    m2.xe -= n;
    return RingElement::mono(m2);
  }
  int W = 0;
  for (const auto& [k, e] : mo.w) W += e;

  if (W >= 2) {
    // Prefer an equal-eta pair with the smallest m's (R4); otherwise the
    // first two distinct-eta factors (R3).
    Monomial rest = mo;
    auto take = [&](const std::pair<int, EtaParam>& key) {
      if (--rest.w[key] == 0) rest.w.erase(key);
    };
    for (auto it = mo.w.begin(); it != mo.w.end(); ++it) {
      if (it->second >= 2) {
        // R4 with m = t
        int m = it->first.first;
        take(it->first);
        take(it->first);
        RingElement rhs =
            RingElement::var_w(m, it->first.second) * (RingElement::one() + f4_) +
            (RingElement::var_x() * f1_ * f1_).scaled(Int(m) * (m - 1));
        return RingElement::mono(rest) * rhs;
      }
      for (auto jt = std::next(it); jt != mo.w.end(); ++jt) {
        if (it->first.second == jt->first.second) {
          // R4, m <= t by key ordering
          int m = it->first.first, t = jt->first.first;
          take(it->first);
          take(jt->first);
          RingElement rhs =
              RingElement::var_w(m, it->first.second) *
                  (RingElement::one() + f4_) +
              (RingElement::var_x() * f1_ * f1_).scaled(Int(m) * (t - 1));
          return RingElement::mono(rest) * rhs;
        }
      }
    }
    // No equal-eta pair: R3 on the first two factors.
    auto it = mo.w.begin();
    auto jt = std::next(it);
    int m = it->first.first, s = jt->first.first;
    take(it->first);
    take(jt->first);
    RingElement rhs = (RingElement::var_x() * f1_ * f1_).scaled(Int(m) * s);
    return RingElement::mono(rest) * rhs;
  }

  // R2: z_+ z_- -> 1 + f1 (2y + 4 f3)
  if (mo.zp > 0 && mo.zm > 0) {
    Monomial rest = mo;
    rest.zp--;
    rest.zm--;
    return RingElement::mono(rest) * r2_rhs_;
  }

  // R5: z_pm w_{m,eta} -> f4 w_{m,eta} + correction
  if (W == 1 && mo.zp + mo.zm > 0) {
    Monomial rest = mo;
    auto key = mo.w.begin()->first;
    rest.w.clear();
    RingElement corr;
    if (mo.zp > 0) {
      rest.zp--;
      corr = (RingElement::var_x() * f1_ * f1_).scaled(key.first);
    } else {
      rest.zm--;
      corr = (f1_ * (RingElement::var_y() + f3_)).scaled(key.first);
    }
    RingElement rhs = f4_ * RingElement::var_w(key.first, key.second) + corr;
    return RingElement::mono(rest) * rhs;
  }

  // R6: y^{n-1} w_{m,eta} -> m f1 (1 + f4) - (f1 tail) w_{m,eta}
  if (W == 1 && mo.ye >= n - 1) {
    Monomial rest = mo;
    rest.ye -= n - 1;
    auto key = mo.w.begin()->first;
    rest.w.clear();
    RingElement rhs = (f1_ * (RingElement::one() + f4_)).scaled(key.first) -
                      f1_tail_ * RingElement::var_w(key.first, key.second);
    return RingElement::mono(rest) * rhs;
  }

  // R7: y^{n-1} z_pm -> f1 (1 + 2 f4) - (f1 tail) z_pm
  if (W == 0 && mo.zp + mo.zm > 0 && mo.ye >= n - 1) {
    Monomial rest = mo;
    rest.ye -= n - 1;
    int sign = mo.zp > 0 ? +1 : -1;
    (sign > 0 ? rest.zp : rest.zm)--;
    RingElement rhs = f1_ * (RingElement::one() + f4_.scaled(2)) -
                      f1_tail_ * RingElement::var_z(sign);
    return RingElement::mono(rest) * rhs;
  }

  // R8: y^{2n-1} -> y^{2n-1} - f1 f2 on z/w-free monomials
  if (W == 0 && mo.zp + mo.zm == 0 && mo.ye >= 2 * n - 1) {
    Monomial rest = mo;
    rest.ye -= 2 * n - 1;
    return RingElement::mono(rest) * r8_rhs_;
  }
  return std::nullopt;
}

RingElement Presentation::normal_form(const RingElement& e) const {
  RingElement out;
  std::map<Monomial, Int> pending(e.terms().begin(), e.terms().end());
  while (!pending.empty()) {
    auto it = pending.begin();
    Monomial mo = it->first;
    Int c = it->second;
    pending.erase(it);
    if (c == 0) continue;
    auto red = reduce_monomial(mo);
    if (!red) {
      out.add_term(mo, c);
      continue;
    }
    for (const auto& [m2, c2] : red->terms()) {
      Int& slot = pending[m2];
      slot += c2 * c;
      if (slot == 0) pending.erase(m2);
    }
  }
  return out;
}

RingElement Presentation::multiply(const RingElement& a, const RingElement& b) const {
  return normal_form(a * b);
}

RingElement Presentation::stable_normal_form(const RingElement& e) const {
  const int n = n_;
  RingElement nf = normal_form(e);
  // Extra rule: y^{n-1} -> -(f1 tail), the residue of f1 = 0, plus R1.
  RingElement out;
  std::map<Monomial, Int> pending(nf.terms().begin(), nf.terms().end());
  while (!pending.empty()) {
    auto it = pending.begin();
    Monomial mo = it->first;
    Int c = it->second;
    pending.erase(it);
    if (c == 0) continue;
    std::optional<RingElement> red;
    if (mo.xe >= n) {
      Monomial m2 = mo;
      m2.xe -= n;
      red = RingElement::mono(m2);
    } else if (mo.ye >= n - 1) {
      Monomial rest = mo;
      rest.ye -= n - 1;
      red = RingElement::mono(rest) * (-f1_tail_);
    }
    if (!red) {
      out.add_term(mo, c);
      continue;
    }
    for (const auto& [m2, c2] : red->terms()) {
      Int& slot = pending[m2];
      slot += c2 * c;
      if (slot == 0) pending.erase(m2);
    }
  }
  return out;
}

Int Presentation::dimev(const RingElement& e) const {
  Int total = 0;
  for (const auto& [m, c] : e.terms()) {
    Int d = 1;
    for (int i = 0; i < m.ye; ++i) d *= 2;
    for (int i = 0; i < m.zp + m.zm; ++i) d *= 2 * n_ - 1;
    for (const auto& [k, ex] : m.w)
      for (int i = 0; i < ex; ++i) d *= Int(k.first) * n_;
    total += c * d;
  }
  return total;
}

bool lemma32_check(int m, int l, int s) {
  if (l < 1 || 2 * l > m - 1 || s < 0) return false;
  Rat lhs = 0;
  for (int i = 0; i <= s; ++i) {
    Rat term = Rat(m - 2 * l + 2 * i, m - 2 * l + i) * Rat(binom(m - 2 * l + i, i));
    lhs += (i % 2 ? -term : term);
  }
  Rat rhs = Rat(binom(m - 2 * l + s, s));
  if (s % 2) rhs = -rhs;
  lhs.canonicalize();
  rhs.canonicalize();
  return lhs == rhs;
}

RingElement class_of(const IndecLabel& lab, const Presentation& P,
                     const DerivedTables& T, const CycField& F) {
  const int n = P.n();
  auto simple_poly = [&](int l, int r) {
    // [V(l,r)] = x^r sum_i (-1)^i C(l-1-i, i) x^i y^{l-1-2i}
    RingElement s;
    for (int i = 0; i <= (l - 1) / 2; ++i) {
      Monomial m;
      m.xe = ((r + i) % n + n) % n;
      m.ye = l - 1 - 2 * i;
      s.add_term(m, (i % 2 ? -1 : 1) * binom(l - 1 - i, i));
    }
    return s;
  };
  switch (lab.kind) {
    case IndecKind::Simple:
      return P.normal_form(simple_poly(lab.l, lab.r));
    case IndecKind::Proj: {
      auto it = T.proj_poly.find({lab.l, lab.r});
      if (it == T.proj_poly.end())
        throw MissingTableEntry("proj_poly missing for " + lab.str());
      return it->second;
    }
    case IndecKind::Syz: {
      auto it = T.syz_corr.find({lab.sign, lab.m, lab.l, lab.r});
      if (it == T.syz_corr.end())
        throw MissingTableEntry("syz_corr missing for " + lab.str());
      return P.normal_form(simple_poly(lab.l, lab.r) *
                               RingElement::var_z(lab.sign, lab.m) -
                           it->second);
    }
    case IndecKind::Band: {
      auto it = T.band_corr.find({lab.s, lab.l, lab.r});
      if (it == T.band_corr.end())
        throw MissingTableEntry("band_corr missing for " + lab.str());
      // Module parameter eta' corresponds to the generator subscript
      // eta = eta' q^{l-1} / (l)_q  (inverse of eta -> eta q^{1-l} (l)_q).
      EtaParam key = lab.eta;
      if (!key.inf)
        key = EtaParam::of(lab.eta.v * F.q_power(lab.l - 1) / F.q_int(lab.l));
      return P.normal_form(simple_poly(lab.l, lab.r) *
                               RingElement::var_w(lab.s, key) -
                           it->second);
    }
  }
  throw RangeError("unknown label kind");
}

}  // namespace green
