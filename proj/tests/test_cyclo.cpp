#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "green/cyclo.hpp"

using namespace green;

TEST_CASE("cyclotomic field basics at n=3") {
  CycField F(3);
  CHECK(F.degree() == 2);  // Phi_3 = T^2 + T + 1
  CHECK(F.modulus() == std::vector<Int>{1, 1, 1});
  CHECK((F.q() + F.q_power(2)) == F.from_long(-1));
  CHECK(F.q_power(3) == F.one());
  CHECK(F.q_power(-1) == F.q_power(2));
  CHECK(F.q_int(3).is_zero());  // (3)_q = 1 + q + q^2 = 0
  CHECK(F.q_int(2) == F.one() + F.q());
}

TEST_CASE("Phi_4 and Phi_6 are computed by exact division") {
  CycField F4(4);
  CHECK(F4.degree() == 2);
  CHECK((F4.q() * F4.q()) == F4.from_long(-1));  // q^2 = -1
  CycField F6(6);
  CHECK(F6.degree() == 2);
  CHECK(F6.modulus() == std::vector<Int>{1, -1, 1});  // T^2 - T + 1
  CHECK(F6.q_power(3) == F6.from_long(-1));
}

TEST_CASE("field arithmetic") {
  CycField F(5);
  CycNum a = F.q() + F.from_long(2);
  CycNum b = a.inverse();
  CHECK((a * b) == F.one());
  CHECK((a / a) == F.one());
  CHECK_THROWS_AS(F.one() / F.zero(), DivisionByZero);
  CHECK(a.pow(0) == F.one());
  CHECK(a.pow(3) == a * a * a);
  CHECK((-a) + a == F.zero());
}

TEST_CASE("alpha coefficients") {
  CycField F(3);
  // alpha_i(l) = (i)_q (1 - q^{i-l}); alpha_0(l) = 0, alpha_l(l) = 0 iff n | l.
  CHECK(F.alpha(0, 2).is_zero());
  CHECK(F.alpha(2, 2).is_zero());
  CHECK(F.alpha(1, 2) == F.q_int(1) * (F.one() - F.q_power(-1)));
  CHECK(!F.alpha(1, 2).is_zero());
}

TEST_CASE("reduction of high-degree polynomials") {
  CycField F(3);
  // q^2 = -1 - q, so T^2 reduces to (-1, -1).
  std::vector<Rat> p{0, 0, 1};
  auto r = F.reduce(p);
  CHECK(r == std::vector<Rat>{Rat(-1), Rat(-1)});
}
