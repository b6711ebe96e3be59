#include "green/verify.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <sstream>

namespace green {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string multiset_str(const LabelMultiset& ms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [lab, mult] : ms) {
    if (!first) os << " + ";
    first = false;
    if (mult != 1) os << mult << "*";
    os << lab.str();
  }
  return first ? "0" : os.str();
}

// Exact integer determinant (Bareiss fraction-free elimination).
Int int_det(std::vector<std::vector<Int>> a) {
  int n = (int)a.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num / prev;  // exact by Bareiss
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace

std::string CheckReport::to_json_line() const {
  nlohmann::json j{{"id", id},           {"n", n},     {"inputs", inputs},
                   {"status", status},   {"lhs", lhs}, {"rhs", rhs},
                   {"elapsed_sec", elapsed_sec}};
  return j.dump();
}

int report_exit_code(const std::vector<CheckReport>& reports) {
  bool inc = false;
  for (const auto& r : reports) {
    if (r.status == "fail") return 1;
    if (r.status == "inconclusive") inc = true;
  }
  return inc ? 2 : 0;
}

RingElement Verifier::cls(const IndecLabel& lab) const {
  return class_of(lab, *P_, *T_, cat_->field());
}

CheckReport Verifier::make_report(const std::string& id, const std::string& inputs,
                                  const RingElement& lhs, const RingElement& rhs,
                                  double elapsed) const {
  CheckReport rep;
  rep.id = id;
  rep.n = cat_->n();
  rep.inputs = inputs;
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  rep.status = (lhs == rhs) ? "pass" : "fail";
  rep.elapsed_sec = elapsed;
  return rep;
}

std::vector<EtaParam> Verifier::default_etas() const {
  const CycField& F = cat_->field();
  return {EtaParam::of(F.zero()), EtaParam::of(F.one()),
          EtaParam::of(F.from_long(2)), EtaParam::infinity()};
}

std::vector<IndecLabel> Verifier::bounded_catalog(
    int syz_m, int band_s, const std::vector<EtaParam>& etas) const {
  const int n = cat_->n();
  std::vector<IndecLabel> out;
  for (int l = 1; l <= n; ++l)
    for (int r = 0; r < n; ++r) out.push_back(cat_->simple(l, r));
  for (int l = 1; l < n; ++l)
    for (int r = 0; r < n; ++r) out.push_back(cat_->proj(l, r));
  for (int sign : {+1, -1})
    for (int m = 1; m <= syz_m; ++m)
      for (int l = 1; l < n; ++l)
        for (int r = 0; r < n; ++r) out.push_back(cat_->syz(sign, m, l, r));
  for (int s = 1; s <= band_s; ++s)
    for (int l = 1; l < n; ++l)
      for (int r = 0; r < n; ++r)
        for (const EtaParam& e : etas) out.push_back(cat_->band(s, l, r, e));
  return out;
}

CheckReport Verifier::crosscheck_product(const IndecLabel& A, const IndecLabel& B) {
  auto t0 = Clock::now();
  CheckReport rep;
  rep.id = "crosscheck";
  rep.n = cat_->n();
  rep.inputs = A.str() + " (x) " + B.str();
  try {
    RingElement lhs = P_->multiply(cls(A), cls(B));
    LabelMultiset d = cat_->decompose_tensor(A, B);
    RingElement rhs;
    for (const auto& [lab, mult] : d) rhs += cls(lab).scaled(mult);
    rhs = P_->normal_form(rhs);
    rep.lhs = lhs.str();
    rep.rhs = rhs.str() + "   [" + multiset_str(d) + "]";
    rep.status = (lhs == rhs) ? "pass" : "fail";
  } catch (const UnidentifiedError& e) {
    rep.status = "inconclusive";
    rep.rhs = std::string("unidentified: ") + e.what();
  } catch (const InconclusiveError& e) {
    rep.status = "inconclusive";
    rep.rhs = std::string("inconclusive: ") + e.what();
  } catch (const NonSplitSemisimpleQuotient& e) {
    rep.status = "inconclusive";
    rep.rhs = std::string("splitting stalled: ") + e.what();
  }
  rep.elapsed_sec = seconds_since(t0);
  return rep;
}

const std::vector<std::string>& Verifier::relation_names() {
  static const std::vector<std::string> names = {
      "L3.3.1", "L3.3.2", "L3.3.3", "L3.4.1", "L3.4.2", "L3.6.1",
      "L3.6.2", "L3.6.3", "L3.6.4", "L3.6.5", "T3.10.U"};
  return names;
}

CheckReport Verifier::verify_named_relation(const std::string& name, int max_m) {
  auto t0 = Clock::now();
  const int n = cat_->n();
  const CycField& F = cat_->field();
  const Presentation& P = *P_;
  RingElement x = RingElement::var_x(), y = RingElement::var_y();
  RingElement one = RingElement::one();
  const RingElement &f1 = P.f(1), &f2 = P.f(2), &f3 = P.f(3), &f4 = P.f(4);
  auto zc = [&](int sign) { return RingElement::var_z(sign); };
  auto wc = [&](int m, const EtaParam& e) { return RingElement::var_w(m, e); };
  auto neg_q = [&](const EtaParam& e) {
    return e.inf ? e : EtaParam::of(-(e.v * F.q()));
  };

  auto fail = [&](const std::string& inputs, const std::string& lhs,
                  const std::string& rhs) {
    CheckReport rep;
    rep.id = name;
    rep.n = n;
    rep.inputs = inputs;
    rep.status = "fail";
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.elapsed_sec = seconds_since(t0);
    return rep;
  };
  auto pass = [&](const std::string& inputs, const std::string& both) {
    CheckReport rep;
    rep.id = name;
    rep.n = n;
    rep.inputs = inputs;
    rep.status = "pass";
    rep.lhs = both;
    rep.rhs = both;
    rep.elapsed_sec = seconds_since(t0);
    return rep;
  };
  auto sym = [&](const std::string& inputs, const RingElement& l,
                 const RingElement& r) -> std::optional<CheckReport> {
    RingElement ln = P.normal_form(l), rn = P.normal_form(r);
    if (ln != rn) return fail(inputs, ln.str(), rn.str());
    return std::nullopt;
  };
  auto oracle = [&](const std::string& inputs, const IndecLabel& A,
                    const IndecLabel& B,
                    const LabelMultiset& expect) -> std::optional<CheckReport> {
    LabelMultiset got = cat_->decompose_tensor(A, B);
    if (got != expect)
      return fail(inputs + " [oracle]", multiset_str(got), multiset_str(expect));
    return std::nullopt;
  };

  std::vector<EtaParam> etas = default_etas();

  if (name == "L3.3.1" || name == "L3.3.2") {
    LabelMultiset expect;
    for (int i = 0; i <= c_half(n - 2); ++i) expect[cat_->proj(2 * i + 1, -i)] = 1;
    if (auto r = oracle("V(n,1)xV(n,0)", cat_->simple(n, 1), cat_->simple(n, 0), expect))
      return *r;
    RingElement lhs;
    int i0 = (name == "L3.3.1") ? 0 : 1;
    for (int i = i0; i <= c_half(n - 2); ++i) lhs += cls(cat_->proj(2 * i + 1, -i));
    RingElement rhs = (name == "L3.3.1") ? x * f1 * f1 : f3 * f1;
    if (auto r = sym(name, lhs, rhs)) return *r;
    return pass(name, P.normal_form(rhs).str());
  }
  if (name == "L3.3.3") {
    LabelMultiset expect;
    expect[cat_->simple(n, 0)] = 1;
    for (int i = 1; i <= c_half(n - 1); ++i) expect[cat_->proj(2 * i, -i)] += 2;
    if (auto r = oracle("OmegaV(1,0)xV(n,0)", cat_->syz(+1, 1, 1, 0),
                        cat_->simple(n, 0), expect))
      return *r;
    RingElement lhs;
    for (int i = 1; i <= c_half(n - 1); ++i) lhs += cls(cat_->proj(2 * i, -i));
    if (auto r = sym(name, lhs, f4 * f1)) return *r;
    return pass(name, P.normal_form(f4 * f1).str());
  }
  if (name == "L3.4.1") {
    LabelMultiset expect;
    expect[cat_->simple(1, 0)] = 1;
    expect[cat_->proj(n - 1, 1)] = 2;
    for (int i = 1; i <= c_half(n - 2); ++i) expect[cat_->proj(2 * i + 1, -i)] += 4;
    if (auto r = oracle("OmegaV(1,0)xOmega^-1V(1,0)", cat_->syz(+1, 1, 1, 0),
                        cat_->syz(-1, 1, 1, 0), expect))
      return *r;
    RingElement rhs = one + f1 * (y.scaled(2) + f3.scaled(4));
    if (auto r = sym(name, zc(+1) * zc(-1), rhs)) return *r;
    return pass(name, P.normal_form(rhs).str());
  }
  if (name == "L3.4.2") {
    LabelMultiset expect;
    expect[cat_->simple(n, 0)] = 1;
    for (int i = 1; i <= c_half(n - 1); ++i) expect[cat_->proj(2 * i, -i)] += 2;
    for (int sign : {+1, -1}) {
      if (auto r = oracle("Omega^{pm}V(1,0)xV(n,0)", cat_->syz(sign, 1, 1, 0),
                          cat_->simple(n, 0), expect))
        return *r;
      if (auto r = sym(name, zc(sign) * f1, (one + f4.scaled(2)) * f1)) return *r;
    }
    return pass(name, P.normal_form((one + f4.scaled(2)) * f1).str());
  }
  if (name == "L3.6.1") {
    for (int m = 1; m <= max_m; ++m)
      for (const EtaParam& e : etas) {
        std::string in = "M_" + std::to_string(m) + "(1,0;" + e.str() + ")xV(n,0)";
        LabelMultiset expect;
        expect[cat_->simple(n, 0)] = m;
        for (int i = 1; i <= c_half(n - 1); ++i) expect[cat_->proj(2 * i, -i)] += m;
        if (auto r = oracle(in, cat_->band(m, 1, 0, e), cat_->simple(n, 0), expect))
          return *r;
        if (auto r = sym(in, wc(m, e) * f1, (one + f4).scaled(m) * f1)) return *r;
      }
    return pass(name, "w_{m,eta} f1 = m (1 + f4) f1");
  }
  if (name == "L3.6.2" || name == "L3.6.3") {
    int sign = (name == "L3.6.2") ? +1 : -1;
    for (int m = 1; m <= max_m; ++m)
      for (const EtaParam& e : etas) {
        std::string in = (sign > 0 ? "z+ " : "z- ") + std::string("w_{") +
                         std::to_string(m) + "," + e.str() + "}";
        LabelMultiset expect;
        expect[cat_->band(m, n - 1, 1, neg_q(e))] = 1;
        expect[sign > 0 ? cat_->proj(1, 0) : cat_->proj(n - 1, 1)] = m;
        for (int i = 1; i <= c_half(n - 2); ++i)
          expect[cat_->proj(2 * i + 1, -i)] += 2 * m;
        if (auto r = oracle(in, cat_->syz(sign, 1, 1, 0), cat_->band(m, 1, 0, e),
                            expect))
          return *r;
        RingElement corr = (sign > 0) ? (x * f1 * f1).scaled(m)
                                      : (f1 * (y + f3)).scaled(m);
        if (auto r = sym(in, zc(sign) * wc(m, e), f4 * wc(m, e) + corr)) return *r;
      }
    return pass(name, "z w_{m,eta} = f4 w_{m,eta} + correction");
  }
  if (name == "L3.6.4") {
    for (int m = 1; m <= max_m; ++m)
      for (int s = 1; s <= max_m; ++s)
        for (size_t a = 0; a < etas.size(); ++a)
          for (size_t b = 0; b < etas.size(); ++b) {
            if (etas[a] == etas[b]) continue;
            std::string in = "w_{" + std::to_string(m) + "," + etas[a].str() +
                             "} w_{" + std::to_string(s) + "," + etas[b].str() + "}";
            LabelMultiset expect;
            for (int i = 0; i <= c_half(n - 2); ++i)
              expect[cat_->proj(2 * i + 1, -i)] = m * s;
            if (auto r = oracle(in, cat_->band(m, 1, 0, etas[a]),
                                cat_->band(s, 1, 0, etas[b]), expect))
              return *r;
            if (auto r = sym(in, wc(m, etas[a]) * wc(s, etas[b]),
                             (x * f1 * f1).scaled(Int(m) * s)))
              return *r;
          }
    return pass(name, "w_{m,eta} w_{s,alpha} = m s x f1^2");
  }
  if (name == "L3.6.5") {
    for (int m = 1; m <= max_m; ++m)
      for (int t = m; t <= max_m; ++t)
        for (const EtaParam& e : etas) {
          std::string in = "w_{" + std::to_string(m) + "," + e.str() + "} w_{" +
                           std::to_string(t) + "," + e.str() + "}";
          LabelMultiset expect;
          expect[cat_->band(m, 1, 0, e)] += 1;
          expect[cat_->band(m, n - 1, 1, neg_q(e))] += 1;
          if ((t - 1) * m > 0) expect[cat_->proj(1, 0)] = (t - 1) * m;
          for (int i = 1; i <= c_half(n - 2); ++i)
            expect[cat_->proj(2 * i + 1, -i)] += m * t;
          if (auto r = oracle(in, cat_->band(m, 1, 0, e), cat_->band(t, 1, 0, e),
                              expect))
            return *r;
          if (auto r = sym(in, wc(m, e) * wc(t, e),
                           wc(m, e) * (one + f4) +
                               (x * f1 * f1).scaled(Int(m) * (t - 1))))
            return *r;
        }
    return pass(name, "w_{m,eta} w_{t,eta} = w_{m,eta}(1 + f4) + (t-1) m x f1^2");
  }
  if (name == "T3.10.U") {
    std::vector<std::pair<std::string, RingElement>> gens;
    gens.push_back({"x^n-1", RingElement::var_x(n) - one});
    gens.push_back({"f1 f2", f1 * f2});
    gens.push_back({"z+ z- - 1 - f1(2y+4f3)",
                    zc(+1) * zc(-1) - one - f1 * (y.scaled(2) + f3.scaled(4))});
    gens.push_back({"f1(z+ - 1 - 2f4)", f1 * (zc(+1) - one - f4.scaled(2))});
    gens.push_back({"f1(z+ - z-)", f1 * (zc(+1) - zc(-1))});
    for (int m = 1; m <= max_m; ++m)
      for (const EtaParam& e : etas) {
        gens.push_back({"f1(w - m - m f4)",
                        f1 * (wc(m, e) - one.scaled(m) - f4.scaled(m))});
        gens.push_back({"(z+ - f4)w - m x f1^2",
                        (zc(+1) - f4) * wc(m, e) - (x * f1 * f1).scaled(m)});
        gens.push_back({"(z- - f4)w - m f1(y+f3)",
                        (zc(-1) - f4) * wc(m, e) - (f1 * (y + f3)).scaled(m)});
        for (int t = m; t <= max_m; ++t)
          gens.push_back({"w_m(w_t - 1 - f4) - (t-1)m x f1^2",
                          wc(m, e) * (wc(t, e) - one - f4) -
                              (x * f1 * f1).scaled(Int(m) * (t - 1))});
        for (const EtaParam& a : etas) {
          if (a == e) continue;
          for (int s = 1; s <= max_m; ++s)
            gens.push_back({"w_{m,eta}w_{s,alpha} - m s x f1^2",
                            wc(m, e) * wc(s, a) - (x * f1 * f1).scaled(Int(m) * s)});
        }
      }
    for (const auto& [desc, g] : gens) {
      RingElement nf = P.normal_form(g);
      if (!nf.is_zero()) return fail(desc, nf.str(), "0");
    }
    return pass(name, "all generators of the relation ideal reduce to 0");
  }
  CheckReport rep;
  rep.id = name;
  rep.n = n;
  rep.status = "fail";
  rep.lhs = "unknown relation name";
  rep.elapsed_sec = seconds_since(t0);
  return rep;
}

CheckReport Verifier::verify_basis(int max_m) {
  auto t0 = Clock::now();
  const int n = cat_->n();
  const CycField& F = cat_->field();
  CheckReport rep;
  rep.id = "basis";
  rep.n = n;
  rep.inputs = "m <= " + std::to_string(max_m);
  rep.status = "pass";
  std::ostringstream detail;

  auto check_block = [&](const std::string& tag,
                         const std::vector<std::vector<Int>>& M) {
    Int d = int_det(M);
    detail << tag << ": det = " << d.get_str() << "; ";
    if (d != 1 && d != -1) {
      rep.status = "fail";
      rep.rhs = tag + " is not unimodular (det " + d.get_str() + ")";
    }
  };

  {  // z/w-free block: classes of V and P against x^i y^j
    std::vector<std::vector<Int>> M;
    auto row_of = [&](const RingElement& e) {
      std::vector<Int> row(n * (2 * n - 1), 0);
      for (const auto& [mo, c] : e.terms()) {
        if (mo.zp || mo.zm || !mo.w.empty() || mo.xe >= n || mo.ye > 2 * n - 2)
          throw ConstructionFailed("class outside the z/w-free block");
        row[mo.xe * (2 * n - 1) + mo.ye] = c;
      }
      return row;
    };
    for (int l = 1; l <= n; ++l)
      for (int r = 0; r < n; ++r) M.push_back(row_of(cls(cat_->simple(l, r))));
    for (int l = 1; l < n; ++l)
      for (int r = 0; r < n; ++r) M.push_back(row_of(cls(cat_->proj(l, r))));
    check_block("free", M);
  }
  for (int sign : {+1, -1})
    for (int m = 1; m <= max_m; ++m) {
      // top z-degree coefficients of the Omega^{sign m} V(l,r) classes
      std::vector<std::vector<Int>> M;
      for (int l = 1; l < n; ++l)
        for (int r = 0; r < n; ++r) {
          std::vector<Int> row(n * (n - 1), 0);
          RingElement e = cls(cat_->syz(sign, m, l, r));
          for (const auto& [mo, c] : e.terms()) {
            int ze = sign > 0 ? mo.zp : mo.zm;
            if (ze != m) continue;
            row[mo.xe * (n - 1) + mo.ye] = c;
          }
          M.push_back(row);
        }
      check_block((sign > 0 ? "z+^" : "z-^") + std::to_string(m), M);
    }
  for (int m = 1; m <= max_m; ++m) {
    // w-block at the generator index eta = 1
    std::vector<std::vector<Int>> M;
    for (int l = 1; l < n; ++l)
      for (int r = 0; r < n; ++r) {
        EtaParam mod_eta = EtaParam::of(F.q_power(1 - l) * F.q_int(l));
        std::vector<Int> row(n * (n - 1), 0);
        RingElement e = cls(cat_->band(m, l, r, mod_eta));
        for (const auto& [mo, c] : e.terms()) {
          if (mo.w.empty()) continue;
          row[mo.xe * (n - 1) + mo.ye] = c;
        }
        M.push_back(row);
      }
    check_block("w^" + std::to_string(m), M);
  }
  rep.lhs = detail.str();
  if (rep.status == "pass") rep.rhs = rep.lhs;
  rep.elapsed_sec = seconds_since(t0);
  return rep;
}

CheckReport Verifier::verify_omega_band(int s_max) {
  auto t0 = Clock::now();
  const int n = cat_->n();
  const CycField& F = cat_->field();
  CheckReport rep;
  rep.id = "omega-band";
  rep.n = n;
  rep.inputs = "s <= " + std::to_string(s_max);
  rep.status = "pass";
  std::vector<EtaParam> etas = {EtaParam::of(F.zero()), EtaParam::of(F.one()),
                                EtaParam::infinity()};
  int checked = 0;
  for (int l = 1; l < n && rep.status == "pass"; ++l)
    for (int r = 0; r < n && rep.status == "pass"; ++r)
      for (int s = 1; s <= s_max && rep.status == "pass"; ++s)
        for (const EtaParam& e : etas) {
          EtaParam e2 = e.inf ? e : EtaParam::of(-(e.v * F.q_power(l)));
          const ModuleRep& M = cat_->build(cat_->band(s, l, r, e));
          const ModuleRep& want = cat_->build(cat_->band(s, n - l, r + l, e2));
          ModuleRep O = cat_->syzygy(M);
          ModuleRep Oi = cat_->cosyzygy(M);
          std::string in = cat_->band(s, l, r, e).str();
          if (cat_->is_isomorphic(O, want).status != IsoStatus::Iso) {
            rep.status = "fail";
            rep.lhs = "Omega " + in;
            rep.rhs = "expected " + cat_->band(s, n - l, r + l, e2).str();
            break;
          }
          if (cat_->is_isomorphic(Oi, want).status != IsoStatus::Iso) {
            rep.status = "fail";
            rep.lhs = "Omega^-1 " + in;
            rep.rhs = "expected " + cat_->band(s, n - l, r + l, e2).str();
            break;
          }
          ModuleRep O2 = cat_->syzygy(O);
          if (cat_->is_isomorphic(O2, M).status != IsoStatus::Iso) {
            rep.status = "fail";
            rep.lhs = "Omega^2 " + in;
            rep.rhs = "expected " + in;
            break;
          }
          checked += 3;
        }
  if (rep.status == "pass") {
    rep.lhs = std::to_string(checked) + " isomorphisms verified";
    rep.rhs = rep.lhs;
  }
  rep.elapsed_sec = seconds_since(t0);
  return rep;
}

CheckReport Verifier::verify_identities() {
  auto t0 = Clock::now();
  CheckReport rep;
  rep.id = "identities";
  rep.n = cat_->n();
  rep.inputs = "m <= 60, 1 <= l <= (m-1)/2, 0 <= s <= 2l";
  rep.status = "pass";
  long count = 0;
  for (int m = 3; m <= 60; ++m)
    for (int l = 1; 2 * l <= m - 1; ++l)
      for (int s = 0; s <= 2 * l; ++s) {
        ++count;
        if (!lemma32_check(m, l, s)) {
          rep.status = "fail";
          rep.lhs = "(m,l,s) = (" + std::to_string(m) + "," + std::to_string(l) +
                    "," + std::to_string(s) + ")";
          rep.rhs = "identity violated";
          rep.elapsed_sec = seconds_since(t0);
          return rep;
        }
      }
  rep.lhs = std::to_string(count) + " instances verified";
  rep.rhs = rep.lhs;
  rep.elapsed_sec = seconds_since(t0);
  return rep;
}

std::vector<CheckReport> Verifier::run_suite(const std::string& name) {
  std::vector<CheckReport> out;
  if (name == "identities" || name == "all") out.push_back(verify_identities());
  if (name == "relations" || name == "all")
    for (const std::string& rel : relation_names())
      out.push_back(verify_named_relation(rel, std::min(2, T_->max_m)));
  if (name == "basis" || name == "all")
    out.push_back(verify_basis(std::min(3, T_->max_m)));
  if (name == "omega" || name == "all") out.push_back(verify_omega_band(2));
  if (name == "crosscheck" || name == "all") {
    // Products of two Omega^m classes need tables twice as deep.
    auto labels = bounded_catalog(std::min(2, T_->max_m / 2),
                                  std::min(2, T_->max_m), default_etas());
    for (size_t i = 0; i < labels.size(); ++i)
      for (size_t j = i; j < labels.size(); ++j)
        out.push_back(crosscheck_product(labels[i], labels[j]));
  }
  if (out.empty()) throw RangeError("unknown suite: " + name);
  return out;
}

}  // namespace green
