#pragma once

#include "green/modcat.hpp"

namespace green {

struct MissingTableEntry : std::runtime_error {
  explicit MissingTableEntry(const std::string& m) : std::runtime_error(m) {}
};

/// c(t) = floor((t+1)/2), so that c(t) + c(t-1) = t.
int c_half(int t);

/// Exact binomial coefficient; zero when k < 0 or k > n.
Int binom(long n, long k);

/// Monomial in x, y, z_+, z_-, w_{m,eta}. Raw monomials are unrestricted;
/// normal-form monomials obey the basis shape (x^i y^j | x^i y^l z_pm^m |
/// x^i y^l w_{m,eta}).
struct Monomial {
  int xe = 0, ye = 0;
  int zp = 0, zm = 0;                        // exponents of z_+ and z_-
  std::map<std::pair<int, EtaParam>, int> w;  // (m, eta) -> exponent >= 1

  bool operator==(const Monomial& o) const;
  bool operator<(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  std::string str() const;
};

/// Integer linear combination of monomials; zero coefficients absent.
class RingElement {
public:
  using Terms = std::map<Monomial, Int>;

  static RingElement zero() { return RingElement(); }
  static RingElement one() { return mono(Monomial{}); }
  static RingElement mono(const Monomial& m, const Int& c = 1);
  static RingElement var_x(int e = 1);
  static RingElement var_y(int e = 1);
  static RingElement var_z(int sign, int e = 1);
  static RingElement var_w(int m, const EtaParam& eta);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool operator==(const RingElement& o) const { return t_ == o.t_; }
  bool operator!=(const RingElement& o) const { return !(t_ == o.t_); }

  void add_term(const Monomial& m, const Int& c);
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;
  RingElement scaled(const Int& c) const;

  std::string str() const;

private:
  Terms t_;
};

/// The relation family of the presentation, oriented as a terminating
/// rewriting system onto the monomial basis.
class Presentation {
public:
  explicit Presentation(int n);

  int n() const { return n_; }
  const RingElement& f(int k) const;  // f1..f4

  RingElement normal_form(const RingElement& e) const;
  RingElement multiply(const RingElement& a, const RingElement& b) const;
  /// Normal form in the stable quotient (projective classes go to zero).
  RingElement stable_normal_form(const RingElement& e) const;

  /// Dimension homomorphism: x -> 1, y -> 2, z_pm -> 2n-1, w_{m,eta} -> mn.
  Int dimev(const RingElement& e) const;

private:
  // One rewriting step on a monomial, or nullopt when in normal form.
  std::optional<RingElement> reduce_monomial(const Monomial& mo) const;

  int n_;
  RingElement f1_, f2_, f3_, f4_;
  RingElement r2_rhs_;   // 1 + f1 (2y + 4 f3)
  RingElement r8_rhs_;   // y^{2n-1} - f1 f2   (y-degree <= 2n-2)
  RingElement f1_tail_;  // f1 - y^{n-1}       (for the stable y-rule)
};

/// Verifies the binomial identity
/// sum_{i=0}^{s} (-1)^i (m-2l+2i)/(m-2l+i) C(m-2l+i, i) = (-1)^s C(m-2l+s, s).
bool lemma32_check(int m, int l, int s);

/// Oracle-derived dictionary data the closed formulas leave open.
struct DerivedTables {
  int n = 0;
  int max_m = 0;
  std::map<std::pair<int, int>, RingElement> proj_poly;   // (l, r) -> [P(l,r)]
  std::map<std::array<int, 4>, RingElement> syz_corr;     // (sign, m, l, r)
  std::map<std::array<int, 3>, RingElement> band_corr;    // (m, l, r)
};

/// Dictionary image of an indecomposable class in the monomial basis.
RingElement class_of(const IndecLabel& lab, const Presentation& P,
                     const DerivedTables& T, const CycField& F);

/// Compute all table entries by oracle decompositions (m, s <= max_m).
DerivedTables derive_tables(ModCat& cat, const Presentation& P, int max_m);

/// JSON persistence for DerivedTables (schema-versioned).
std::string tables_to_json(const DerivedTables& T);
DerivedTables tables_from_json(const std::string& text, const CycField& F);

}  // namespace green
