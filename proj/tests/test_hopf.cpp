#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "green/hopf.hpp"

using namespace green;

TEST_CASE("PBW multiplication respects the defining relations") {
  CycField F(3);
  HopfAlgebra H(F);
  AlgebraElement a = H.monomial(1, 0, 0, 0);
  AlgebraElement b = H.monomial(0, 1, 0, 0);
  AlgebraElement c = H.monomial(0, 0, 1, 0);
  AlgebraElement d = H.monomial(0, 0, 0, 1);
  // ba = q ab
  CHECK(H.mul(b, a) == H.mul(a, b).scaled(F.q()));
  // da - q ad = 1 - bc
  AlgebraElement lhs = H.mul(d, a);
  lhs -= H.mul(a, d).scaled(F.q());
  AlgebraElement rhs = H.unit();
  rhs -= H.mul(b, c);
  CHECK(lhs == rhs);
  // a^n = 0, b^n = 1
  CHECK(H.mul(a, H.mul(a, a)).is_zero());
  CHECK(H.mul(b, H.mul(b, b)) == H.unit());
}

TEST_CASE("counit and coproduct") {
  CycField F(3);
  HopfAlgebra H(F);
  CHECK(H.counit(H.unit()) == F.one());
  CHECK(H.counit(H.monomial(1, 0, 0, 0)).is_zero());
  CHECK(H.counit(H.monomial(0, 1, 1, 0)) == F.one());
  CHECK(H.generator_coproducts_coassociative());
}

TEST_CASE("regular representation satisfies all relations") {
  CycField F(3);
  HopfAlgebra H(F);
  const RegularRep& R = H.regular_rep();
  CHECK(R.a.rows() == 81);
  CHECK(!H.validate_action(R.a, R.b, R.c, R.d).has_value());
}

TEST_CASE("radical dimension at n=3") {
  CycField F(3);
  HopfAlgebra H(F);
  // dim J = n^4 - n * sum_{l=1}^{n} l^2 = 81 - 3*14 = 39.
  CHECK((int)H.radical_basis().size() == 39);
}
