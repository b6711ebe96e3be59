#include "green/hopf.hpp"

#include <cassert>

namespace green {

void AlgebraElement::add_term(const PbwExp& e, const CycNum& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const CycNum& s) const {
  AlgebraElement r(*F_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.add_term(e, c * s);
  return r;
}

AlgebraElement HopfAlgebra::unit() const { return monomial(0, 0, 0, 0); }

AlgebraElement HopfAlgebra::monomial(int i, int j, int l, int k) const {
  return monomial(PbwExp{i, j, l, k}, F_->one());
}

AlgebraElement HopfAlgebra::monomial(const PbwExp& e, const CycNum& c) const {
  AlgebraElement r(*F_);
  r.add_term(e, c);
  return r;
}

AlgebraElement HopfAlgebra::gen_mul(char g, const AlgebraElement& v) const {
  const int n = F_->order();
  AlgebraElement r(*F_);
  for (const auto& [e, c] : v.terms()) {
    int i = e[0], j = e[1], l = e[2], k = e[3];
    switch (g) {
      case 'a':
        if (i + 1 < n) r.add_term({i + 1, j, l, k}, c);  // a^n = 0
        break;
      case 'b':
        r.add_term({i, (j + 1) % n, l, k}, c * F_->q_power(i));
        break;
      case 'c':
        r.add_term({i, j, (l + 1) % n, k}, c * F_->q_power(i));
        break;
      case 'd': {
        // d a^i = q^i a^i d + (i)_q a^{i-1} - q^{i-1} (i)_q a^{i-1} b c
        if (k + 1 < n) r.add_term({i, j, l, k + 1}, c * F_->q_power(i + j + l));
        if (i >= 1) {
          CycNum iq = F_->q_int(i);
          r.add_term({i - 1, j, l, k}, c * iq);
          r.add_term({i - 1, (j + 1) % n, (l + 1) % n, k},
                     -(c * iq * F_->q_power(i - 1)));
        }
        break;
      }
      default:
        assert(false);
    }
  }
  return r;
}

AlgebraElement HopfAlgebra::mul(const AlgebraElement& u, const AlgebraElement& v) const {
  AlgebraElement r(*F_);
  for (const auto& [e, c] : u.terms()) {
    AlgebraElement t = v;
    for (int s = 0; s < e[3]; ++s) t = gen_mul('d', t);
    for (int s = 0; s < e[2]; ++s) t = gen_mul('c', t);
    for (int s = 0; s < e[1]; ++s) t = gen_mul('b', t);
    for (int s = 0; s < e[0]; ++s) t = gen_mul('a', t);
    r += t.scaled(c);
  }
  return r;
}

CycNum HopfAlgebra::counit(const AlgebraElement& u) const {
  CycNum s = F_->zero();
  for (const auto& [e, c] : u.terms())
    if (e[0] == 0 && e[3] == 0) s += c;
  return s;
}

bool HopfAlgebra::generator_coproducts_coassociative() const {
  // Legs are labelled 0..4 for 1, a, b, c, d; coproducts only involve those.
  using Leg = int;
  using Triple = std::array<Leg, 3>;
  auto delta = [](Leg g) -> std::vector<std::array<Leg, 2>> {
    switch (g) {
      case 0: return {{0, 0}};
      case 1: return {{1, 2}, {0, 1}};  // a -> a(x)b + 1(x)a
      case 2: return {{2, 2}};
      case 3: return {{3, 3}};
      case 4: return {{4, 3}, {0, 4}};  // d -> d(x)c + 1(x)d
    }
    return {};
  };
  for (Leg g = 1; g <= 4; ++g) {
    std::map<Triple, int> lhs, rhs;
    for (auto [u, v] : delta(g)) {
      for (auto [u1, u2] : delta(u)) lhs[{u1, u2, v}] += 1;  // (Delta (x) id)
      for (auto [v1, v2] : delta(v)) rhs[{u, v1, v2}] += 1;  // (id (x) Delta)
    }
    if (lhs != rhs) return false;
  }
  return true;
}

std::optional<std::string> HopfAlgebra::validate_action(const QMat& a, const QMat& b,
                                                        const QMat& c, const QMat& d) const {
  int m = a.rows();
  if (a.cols() != m || b.rows() != m || b.cols() != m || c.rows() != m ||
      c.cols() != m || d.rows() != m || d.cols() != m)
    throw ShapeMismatch();
  const int n = F_->order();
  CycNum q = F_->q();
  QMat I = QMat::identity(*F_, m);
  if (!(b * a == (a * b).scaled(q))) return "ba=qab";
  if (!(d * b == (b * d).scaled(q))) return "db=qbd";
  if (!(c * a == (a * c).scaled(q))) return "ca=qac";
  if (!(d * c == (c * d).scaled(q))) return "dc=qcd";
  if (!(b * c == c * b)) return "bc=cb";
  if (!a.pow(n).is_zero()) return "a^n=0";
  if (!b.pow(n).is_identity()) return "b^n=1";
  if (!c.pow(n).is_identity()) return "c^n=1";
  if (!d.pow(n).is_zero()) return "d^n=0";
  if (!(d * a - (a * d).scaled(q) == I - b * c)) return "da-qad=1-bc";
  return std::nullopt;
}

int HopfAlgebra::pbw_index(const PbwExp& e) const {
  const int n = F_->order();
  return ((e[0] * n + e[1]) * n + e[2]) * n + e[3];
}

const RegularRep& HopfAlgebra::regular_rep() const {
  if (reg_) return *reg_;
  const int n = F_->order();
  int dim = n * n * n * n;
  RegularRep R{std::vector<PbwExp>(), QMat(*F_, dim, dim), QMat(*F_, dim, dim),
               QMat(*F_, dim, dim), QMat(*F_, dim, dim)};
  R.basis.reserve(dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k) R.basis.push_back({i, j, l, k});
  auto fill = [&](char g, QMat& M) {
    for (int col = 0; col < dim; ++col) {
      AlgebraElement w = monomial(R.basis[col], F_->one());
      AlgebraElement gw = gen_mul(g, w);
      for (const auto& [e, c] : gw.terms()) M.at(pbw_index(e), col) = c;
    }
  };
  fill('a', R.a);
  fill('b', R.b);
  fill('c', R.c);
  fill('d', R.d);
  reg_ = std::move(R);
  return *reg_;
}

const std::vector<AlgebraElement>& HopfAlgebra::radical_basis() const {
  if (rad_) return *rad_;
  const int n = F_->order();
  int dim = n * n * n * n;
  const RegularRep& R = regular_rep();

  // tau(m) = trace(L_m); the trace form is t(u, v) = trace(L_{uv}).
  std::vector<CycNum> tau(dim, F_->zero());
  for (int m = 0; m < dim; ++m) {
    AlgebraElement mm = monomial(R.basis[m], F_->one());
    for (int w = 0; w < dim; ++w) {
      AlgebraElement prod = mul(mm, monomial(R.basis[w], F_->one()));
      auto it = prod.terms().find(R.basis[w]);
      if (it != prod.terms().end()) tau[m] += it->second;
    }
  }
  auto tau_of = [&](const AlgebraElement& u) {
    CycNum s = F_->zero();
    for (const auto& [e, c] : u.terms()) s += c * tau[pbw_index(e)];
    return s;
  };

  QMat G(*F_, dim, dim);
  for (int u = 0; u < dim; ++u) {
    AlgebraElement um = monomial(R.basis[u], F_->one());
    for (int v = u; v < dim; ++v) {
      CycNum t = tau_of(mul(um, monomial(R.basis[v], F_->one())));
      G.at(u, v) = t;
      G.at(v, u) = t;  // trace form is symmetric
    }
  }
  QMat K = G.kernel();
  std::vector<AlgebraElement> basis;
  for (int j = 0; j < K.cols(); ++j) {
    AlgebraElement e(*F_);
    for (int i = 0; i < dim; ++i) e.add_term(R.basis[i], K.at(i, j));
    basis.push_back(std::move(e));
  }
  rad_ = std::move(basis);
  return *rad_;
}

}  // namespace green
