#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "green/greenring.hpp"

using namespace green;

namespace {

RingElement x(int e = 1) { return RingElement::var_x(e); }
RingElement y(int e = 1) { return RingElement::var_y(e); }

}  // namespace

TEST_CASE("structure polynomials at n=3") {
  Presentation P(3);
  CHECK(P.f(1) == y(2) - x());
  CHECK(P.f(2) == y(3) - (x() * y()).scaled(3) - RingElement::one().scaled(2));
  CHECK(P.f(3) == x(2));
  CHECK(P.f(4) == x() * y());
}

TEST_CASE("normal form frozen values at n=3") {
  Presentation P(3);
  // z+ z- = -3 - 2xy + 2y^3 + 4x^2y^2
  RingElement zz = P.multiply(RingElement::var_z(+1), RingElement::var_z(-1));
  RingElement want = -RingElement::one().scaled(3) - (x() * y()).scaled(2) +
                     y(3).scaled(2) + (x(2) * y(2)).scaled(4);
  CHECK(zz == want);
  // x f1^2 = x y^4 - 2 x^2 y^2 + 1
  RingElement xf1sq = P.normal_form(x() * P.f(1) * P.f(1));
  CHECK(xf1sq == x() * y(4) - (x(2) * y(2)).scaled(2) + RingElement::one());
  // x^n reduces to 1
  CHECK(P.normal_form(x(3)) == RingElement::one());
  CHECK(P.normal_form(x(7)) == x());
}

TEST_CASE("normal form is idempotent and multiplicative") {
  Presentation P(3);
  RingElement e = RingElement::var_z(+1, 2) * y(4) +
                  RingElement::var_w(2, EtaParam::infinity()) * x(5);
  RingElement nf = P.normal_form(e);
  CHECK(P.normal_form(nf) == nf);
  RingElement a = RingElement::var_z(+1) + x();
  RingElement b = RingElement::var_z(-1) + y();
  CHECK(P.multiply(a, b) == P.multiply(b, a));
}

TEST_CASE("dimension homomorphism is invariant under reduction") {
  for (int n : {3, 4}) {
    Presentation P(n);
    CycField F(n);
    RingElement e = RingElement::var_z(+1) * RingElement::var_z(-1) * y(n) +
                    RingElement::var_w(2, EtaParam::of(F.one())) *
                        RingElement::var_z(+1);
    CHECK(P.dimev(e) == P.dimev(P.normal_form(e)));
  }
}

TEST_CASE("stable normal form kills projective classes") {
  Presentation P(3);
  // [P(1,0)] = x f1^2 - f3 f1 maps to 0 in the stable quotient.
  RingElement p10 = P.normal_form(x() * P.f(1) * P.f(1) - P.f(3) * P.f(1));
  CHECK(P.stable_normal_form(p10).is_zero());
  CHECK(P.stable_normal_form(P.f(1)).is_zero());
  // z+ z- = 1 stably.
  RingElement zz = P.multiply(RingElement::var_z(+1), RingElement::var_z(-1));
  CHECK(P.stable_normal_form(zz) == RingElement::one());
}

TEST_CASE("binomial identity spot checks") {
  CHECK(lemma32_check(5, 1, 2));
  CHECK(lemma32_check(9, 4, 7));
  CHECK(lemma32_check(60, 29, 58));
  CHECK(binom(5, 2) == 10);
  CHECK(binom(4, -1) == 0);
  CHECK(binom(3, 5) == 0);
}

TEST_CASE("derived tables at n=3 and the dictionary") {
  CycField F(3);
  HopfAlgebra H(F);
  ModCat cat(H);
  Presentation P(3);
  DerivedTables T = derive_tables(cat, P, 2);

  // [P(1,0)] + [P(3,2)] = x f1^2  (the projective column sum).
  RingElement lhs = P.normal_form(class_of(cat.proj(1, 0), P, T, F) +
                                  class_of(cat.proj(3, 2), P, T, F));
  CHECK(lhs == P.normal_form(x() * P.f(1) * P.f(1)));

  // Dictionary classes evaluate to the module dimensions.
  CHECK(P.dimev(class_of(cat.simple(2, 1), P, T, F)) == 2);
  CHECK(P.dimev(class_of(cat.proj(2, 0), P, T, F)) == 6);
  CHECK(P.dimev(class_of(cat.syz(-1, 2, 2, 1), P, T, F)) == 8);
  CHECK(P.dimev(class_of(cat.band(2, 2, 0, EtaParam::infinity()), P, T, F)) == 6);

  // Round trip through JSON.
  DerivedTables T2 = tables_from_json(tables_to_json(T), F);
  CHECK(T2.proj_poly == T.proj_poly);
  CHECK(T2.syz_corr == T.syz_corr);
  CHECK(T2.band_corr == T.band_corr);
}
