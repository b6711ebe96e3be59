#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "green/qmatrix.hpp"

namespace green {

/// PBW exponent quadruple (i, j, l, k), meaning a^i b^j c^l d^k.
using PbwExp = std::array<int, 4>;

/// Element of H_n(1,q) in canonical PBW form; zero coefficients absent.
class AlgebraElement {
public:
  AlgebraElement() : F_(nullptr) {}
  explicit AlgebraElement(const CycField& F) : F_(&F) {}

  const std::map<PbwExp, CycNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PbwExp& e, const CycNum& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement scaled(const CycNum& s) const;

  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

private:
  const CycField* F_;
  std::map<PbwExp, CycNum> terms_;
};

struct RegularRep {
  std::vector<PbwExp> basis;  // PBW monomials in lex order
  QMat a, b, c, d;
};

/// H_n(1,q) on generators a, b, c, d; p is fixed to 1.
class HopfAlgebra {
public:
  explicit HopfAlgebra(const CycField& F) : F_(&F) {}

  const CycField& field() const { return *F_; }
  int n() const { return F_->order(); }

  AlgebraElement unit() const;
  AlgebraElement monomial(int i, int j, int l, int k) const;
  AlgebraElement monomial(const PbwExp& e, const CycNum& c) const;

  /// Left multiplication by a single generator ('a','b','c','d').
  AlgebraElement gen_mul(char g, const AlgebraElement& v) const;

  /// Straightened PBW product.
  AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v) const;

  CycNum counit(const AlgebraElement& u) const;

  /// Coassociativity of the generator coproducts, checked symbolically.
  bool generator_coproducts_coassociative() const;

  /// First violated defining relation of four action matrices, or nullopt.
  std::optional<std::string> validate_action(const QMat& a, const QMat& b,
                                             const QMat& c, const QMat& d) const;

  /// Left regular representation on the PBW basis (dimension n^4). Cached.
  const RegularRep& regular_rep() const;

  /// Basis of rad H_n(1,q), via the kernel of the trace form
  /// t(u, v) = trace(L_u L_v) of the regular representation. Cached.
  const std::vector<AlgebraElement>& radical_basis() const;

  int pbw_index(const PbwExp& e) const;

private:
  const CycField* F_;
  mutable std::optional<RegularRep> reg_;
  mutable std::optional<std::vector<AlgebraElement>> rad_;
};

}  // namespace green
