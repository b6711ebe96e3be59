#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "green/parse.hpp"
#include "green/verify.hpp"

using namespace green;

namespace {

struct Fixture {
  CycField F{3};
  HopfAlgebra H{F};
  ModCat cat{H};
  Presentation P{3};
  DerivedTables T;
  Fixture() { T = derive_tables(cat, P, 2); }
};

Fixture& fx() {
  static Fixture f;
  return f;
}

}  // namespace

TEST_CASE("label shorthand round trips") {
  auto& f = fx();
  CHECK(parse_label("V(2,1)", f.cat) == f.cat.simple(2, 1));
  CHECK(parse_label("P(1,0)", f.cat) == f.cat.proj(1, 0));
  CHECK(parse_label("Omega^2 V(1,0)", f.cat) == f.cat.syz(+1, 2, 1, 0));
  CHECK(parse_label("Omega^-1 V(2,2)", f.cat) == f.cat.syz(-1, 1, 2, 2));
  CHECK(parse_label("M_2(1,0;eta=inf)", f.cat) ==
        f.cat.band(2, 1, 0, EtaParam::infinity()));
  CHECK(parse_label("M_1(2,1;eta=3/2)", f.cat) ==
        f.cat.band(1, 2, 1, EtaParam::of(f.F.from_rat(Rat(3, 2)))));
  CHECK_THROWS_AS(parse_label("Q(1,0)", f.cat), ParseError);
  CHECK_THROWS_AS(parse_label("V(0,0)", f.cat), RangeError);
}

TEST_CASE("element shorthand and JSON round trip") {
  auto& f = fx();
  RingElement e = parse_element("2 * x^2 * y * z+", f.cat, f.P, f.T);
  RingElement want =
      (RingElement::var_x(2) * RingElement::var_y() * RingElement::var_z(+1))
          .scaled(2);
  CHECK(e == want);
  RingElement lab = parse_element("P(1,0)", f.cat, f.P, f.T);
  CHECK(lab == class_of(f.cat.proj(1, 0), f.P, f.T, f.F));
  // JSON round trip.
  RingElement w = RingElement::var_w(2, EtaParam::of(f.F.q())) -
                  RingElement::var_z(-1, 3).scaled(5);
  CHECK(ring_from_json(ring_to_json(w), f.F) == w);
  std::string js = ring_to_json(w).dump();
  CHECK(parse_element(js, f.cat, f.P, f.T) == w);
  CHECK_THROWS_AS(parse_element("x + y", f.cat, f.P, f.T), ParseError);
}

TEST_CASE("report exit codes") {
  CheckReport pass{"a", 3, "", "pass", "", "", 0.0};
  CheckReport fail{"b", 3, "", "fail", "", "", 0.0};
  CheckReport inc{"c", 3, "", "inconclusive", "", "", 0.0};
  CHECK(report_exit_code({pass}) == 0);
  CHECK(report_exit_code({pass, inc}) == 2);
  CHECK(report_exit_code({pass, inc, fail}) == 1);
  auto j = nlohmann::json::parse(pass.to_json_line());
  CHECK(j["id"] == "a");
  CHECK(j["status"] == "pass");
}

TEST_CASE("identity sweep and a named relation") {
  auto& f = fx();
  Verifier ver(f.cat, f.P, f.T);
  CHECK(ver.verify_identities().passed());
  CHECK(ver.verify_named_relation("L3.3.1").passed());
  CHECK(ver.verify_named_relation("L3.4.1").passed());
  CHECK(ver.verify_named_relation("T3.10.U", 2).passed());
}

TEST_CASE("basis blocks are unimodular at n=3") {
  auto& f = fx();
  Verifier ver(f.cat, f.P, f.T);
  CHECK(ver.verify_basis(2).passed());
}

TEST_CASE("crosscheck on a sample pair") {
  auto& f = fx();
  Verifier ver(f.cat, f.P, f.T);
  CheckReport r = ver.crosscheck_product(f.cat.simple(2, 0), f.cat.proj(1, 0));
  CHECK(r.passed());
}
