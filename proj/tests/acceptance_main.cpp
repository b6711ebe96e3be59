// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "green/verify.hpp"

using namespace green;

namespace {

struct Engine {
  explicit Engine(int n, int max_m)
      : F(n), H(F), cat(H), P(n), T(derive_tables(cat, P, max_m)) {}
  CycField F;
  HopfAlgebra H;
  ModCat cat;
  Presentation P;
  DerivedTables T;
};

int failures = 0;

void line(int idx, const std::string& what, bool ok, const std::string& note = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << idx << ": " << what;
  if (!ok && !note.empty()) std::cout << "  [" << note << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

RingElement x(int e = 1) { return RingElement::var_x(e); }
RingElement y(int e = 1) { return RingElement::var_y(e); }

// Random element with bounded support for the normal-form stress test.
RingElement random_element(std::mt19937& rng, int n, const CycField& F) {
  std::uniform_int_distribution<int> nterms(1, 4), coef(-9, 9), xe(0, 2 * n),
      ye(0, 3 * n), kind(0, 3), ze(1, 2), wm(1, 2), weta(0, 2);
  RingElement e;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m;
    m.xe = xe(rng);
    m.ye = ye(rng);
    switch (kind(rng)) {
      case 0: break;
      case 1: m.zp = ze(rng); break;
      case 2: m.zm = ze(rng); break;
      default: {
        EtaParam eta = weta(rng) == 0 ? EtaParam::infinity()
                                      : EtaParam::of(F.from_long(weta(rng) - 1));
        m.w[{wm(rng), eta}] = 1;
        break;
      }
    }
    int c = coef(rng);
    if (c == 0) c = 1;
    e.add_term(m, c);
  }
  return e;
}

}  // namespace

int main() {
  auto t_start = std::chrono::steady_clock::now();
  // Table depth 4: the cross-check sweep multiplies two Omega^2 classes.
  Engine e3(3, 4);
  Verifier v3(e3.cat, e3.P, e3.T);

  // 1: the binomial identity sweep.
  line(1, "binomial identity sweep m <= 60", v3.verify_identities().passed());

  // 2: frozen normal forms at n=3.
  {
    RingElement zz = e3.P.multiply(RingElement::var_z(+1), RingElement::var_z(-1));
    RingElement zz_want = -RingElement::one().scaled(3) - (x() * y()).scaled(2) +
                          y(3).scaled(2) + (x(2) * y(2)).scaled(4);
    RingElement psum =
        e3.P.normal_form(class_of(e3.cat.proj(1, 0), e3.P, e3.T, e3.F) +
                         class_of(e3.cat.proj(3, 2), e3.P, e3.T, e3.F));
    RingElement psum_want = e3.P.normal_form(x() * e3.P.f(1) * e3.P.f(1));
    RingElement explicit_want =
        x() * y(4) - (x(2) * y(2)).scaled(2) + RingElement::one();
    line(2, "frozen normal forms at n=3",
         zz == zz_want && psum == psum_want && psum_want == explicit_want,
         "z+z- -> " + zz.str() + " ; psum -> " + psum.str());
  }

  // 3: frozen tensor decompositions at n=3.
  {
    auto d1 = e3.cat.decompose_tensor(e3.cat.simple(3, 1), e3.cat.simple(3, 0));
    LabelMultiset w1{{e3.cat.proj(1, 0), 1}, {e3.cat.simple(3, 2), 1}};
    auto d2 = e3.cat.decompose_tensor(e3.cat.syz(+1, 1, 1, 0), e3.cat.syz(-1, 1, 1, 0));
    LabelMultiset w2{{e3.cat.simple(1, 0), 1},
                     {e3.cat.proj(2, 1), 2},
                     {e3.cat.simple(3, 2), 4}};
    line(3, "frozen tensor decompositions at n=3", d1 == w1 && d2 == w2);
  }

  // 4: the full n=3 cross-check sweep.
  {
    auto t0 = std::chrono::steady_clock::now();
    auto labels = v3.bounded_catalog(2, 2, v3.default_etas());
    long pairs = 0, bad = 0, inconclusive = 0;
    std::string first_bad;
    for (size_t i = 0; i < labels.size(); ++i)
      for (size_t j = i; j < labels.size(); ++j) {
        ++pairs;
        CheckReport r = v3.crosscheck_product(labels[i], labels[j]);
        if (r.status == "fail") {
          ++bad;
          if (first_bad.empty()) first_bad = r.inputs;
        } else if (r.status == "inconclusive") {
          ++inconclusive;
          if (first_bad.empty()) first_bad = r.inputs + " (inconclusive)";
        }
      }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
    std::ostringstream note;
    note << labels.size() << " labels, " << pairs << " pairs, " << bad
         << " failed, " << inconclusive << " inconclusive, " << (long)secs << "s";
    bool ok = bad == 0 && inconclusive == 0 && secs < 1800.0;
    line(4, "cross-check sweep at n=3 (" + note.str() + ")", ok, first_bad);
  }

  Engine e4(4, 3);
  Verifier v4(e4.cat, e4.P, e4.T);

  // 5: named relations at n=3 and n=4.
  {
    bool ok = true;
    std::string note;
    for (Verifier* v : {&v3, &v4})
      for (const std::string& name : Verifier::relation_names()) {
        CheckReport r = v->verify_named_relation(name, 2);
        if (!r.passed()) {
          ok = false;
          if (note.empty())
            note = "n=" + std::to_string(r.n) + " " + name + ": " + r.lhs +
                   " != " + r.rhs;
        }
      }
    line(5, "named relations and the relation ideal at n=3,4", ok, note);
  }

  // 6: the syzygy law for bands at n=3 and n=4.
  {
    CheckReport r3 = v3.verify_omega_band(2);
    CheckReport r4 = v4.verify_omega_band(2);
    line(6, "syzygies of band modules at n=3,4", r3.passed() && r4.passed(),
         r3.passed() ? r4.lhs + " / " + r4.rhs : r3.lhs + " / " + r3.rhs);
  }

  // 7: normal-form stress test on seeded random elements.
  {
    std::mt19937 rng(20240717);
    bool ok = true;
    std::string note;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
      int n = (trial % 2 == 0) ? 3 : 4;
      Engine& e = (n == 3) ? e3 : e4;
      RingElement a = random_element(rng, n, e.F);
      RingElement b = random_element(rng, n, e.F);
      RingElement nf = e.P.normal_form(a);
      if (e.P.normal_form(nf) != nf) {
        ok = false;
        note = "idempotence, trial " + std::to_string(trial);
      } else if (e.P.multiply(a, b) != e.P.multiply(b, a) ||
                 e.P.multiply(a, b) !=
                     e.P.multiply(e.P.normal_form(a), e.P.normal_form(b))) {
        ok = false;
        note = "order independence, trial " + std::to_string(trial);
      } else if (e.P.dimev(a) != e.P.dimev(nf)) {
        ok = false;
        note = "dimension invariance, trial " + std::to_string(trial);
      }
    }
    line(7, "normal-form stress test (1000 random elements)", ok, note);
  }

  // 8: unimodular change of basis up to m = 3 at n=3 and n=4.
  {
    CheckReport r3 = v3.verify_basis(3);
    CheckReport r4 = v4.verify_basis(3);
    line(8, "basis unimodularity m <= 3 at n=3,4", r3.passed() && r4.passed(),
         r3.passed() ? r4.rhs : r3.rhs);
  }

  // 9: the stable quotient at n=3.
  {
    bool ok = true;
    for (int l = 1; l <= 3 && ok; ++l)
      for (int r = 0; r < 3 && ok; ++r) {
        IndecLabel lab = (l == 3) ? e3.cat.simple(3, r) : e3.cat.proj(l, r);
        ok = e3.P.stable_normal_form(class_of(lab, e3.P, e3.T, e3.F)).is_zero();
      }
    RingElement zz = e3.P.multiply(RingElement::var_z(+1), RingElement::var_z(-1));
    ok = ok && e3.P.stable_normal_form(zz) == RingElement::one();
    line(9, "stable quotient kills projectives; z+ z- = 1 stably", ok);
  }

  double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT")
            << " (" << (long)total << "s)" << std::endl;
  return failures == 0 ? 0 : 1;
}
