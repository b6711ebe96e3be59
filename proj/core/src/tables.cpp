#include <nlohmann/json.hpp>

#include "green/greenring.hpp"
#include "green/parse.hpp"

namespace green {

namespace {

bool is_projective(const IndecLabel& lab, int n) {
  return lab.kind == IndecKind::Proj ||
         (lab.kind == IndecKind::Simple && lab.l == n);
}

}  // namespace

DerivedTables derive_tables(ModCat& cat, const Presentation& P, int max_m) {
  const int n = cat.n();
  const CycField& F = cat.field();
  DerivedTables T;
  T.n = n;
  T.max_m = max_m;

  auto cls = [&](const IndecLabel& lab) { return class_of(lab, P, T, F); };
  auto xshift = [&](const RingElement& e, int r) {
    return P.multiply(RingElement::var_x(((r % n) + n) % n), e);
  };

  // ---- Projective classes, descending in l ----
  {
    // [P(n-1,0)] = [V(2,0)][V(n,n-1)]: the tensor product is exactly P(n-1,0).
    auto d = cat.decompose_tensor(cat.simple(2, 0), cat.simple(n, n - 1));
    if (!(d.size() == 1 && d.begin()->first == cat.proj(n - 1, 0) &&
          d.begin()->second == 1))
      throw ConstructionFailed("unexpected decomposition bootstrapping P(n-1,0)");
    RingElement p = P.multiply(cls(cat.simple(2, 0)), cls(cat.simple(n, n - 1)));
    T.proj_poly[{n - 1, 0}] = p;
    // Closed form x^{n-1} y f1.
    RingElement want = P.normal_form(RingElement::var_x(n - 1) *
                                     RingElement::var_y() * P.f(1));
    if (p != want) throw ConstructionFailed("[P(n-1,0)] closed form mismatch");
  }
  for (int l = n - 2; l >= 1; --l) {
    auto d = cat.decompose_tensor(cat.simple(2, 0), cat.proj(l + 1, 0));
    int r0 = -1;
    RingElement known;
    for (const auto& [lab, mult] : d) {
      if (lab.kind == IndecKind::Proj && lab.l == l) {
        if (mult != 1 || r0 >= 0)
          throw ConstructionFailed("unexpected multiplicity deriving P(l,0)");
        r0 = lab.r;
      } else if (is_projective(lab, n)) {
        known += cls(lab).scaled(mult);
      } else {
        throw ConstructionFailed("non-projective summand deriving P(l,0)");
      }
    }
    if (r0 < 0) throw ConstructionFailed("P(l, r0) summand not found");
    RingElement lhs = P.multiply(cls(cat.simple(2, 0)), T.proj_poly.at({l + 1, 0}));
    T.proj_poly[{l, 0}] = xshift(lhs - known, (n - r0) % n);
  }
  for (int l = 1; l < n; ++l)
    for (int r = 1; r < n; ++r)
      T.proj_poly[{l, r}] = xshift(T.proj_poly.at({l, 0}), r);
  {
    // Closed form [P(1,0)] = x f1^2 - f3 f1.
    RingElement want = P.normal_form(RingElement::var_x() * P.f(1) * P.f(1) -
                                     P.f(3) * P.f(1));
    if (T.proj_poly.at({1, 0}) != want)
      throw ConstructionFailed("[P(1,0)] closed form mismatch");
  }
  for (const auto& [key, e] : T.proj_poly)
    if (P.dimev(e) != 2 * n)
      throw ConstructionFailed("dimension check failed for a projective class");

  // ---- Syzygy corrections ----
  for (int sign : {+1, -1}) {
    T.syz_corr[{sign, 1, 1, 0}] = RingElement::zero();  // z_pm is the class itself
    for (int m = 2; m <= max_m; ++m) {
      auto d = cat.decompose_tensor(cat.syz(sign, m - 1, 1, 0), cat.syz(sign, 1, 1, 0));
      RingElement projsum;
      bool found = false;
      for (const auto& [lab, mult] : d) {
        if (lab == cat.syz(sign, m, 1, 0) && mult == 1) {
          found = true;
        } else if (is_projective(lab, n)) {
          projsum += cls(lab).scaled(mult);
        } else {
          throw ConstructionFailed("unexpected summand deriving syz_corr base");
        }
      }
      if (!found) throw ConstructionFailed("Omega^m V(1,0) summand not found");
      T.syz_corr[{sign, m, 1, 0}] = P.normal_form(
          T.syz_corr.at({sign, m - 1, 1, 0}) * RingElement::var_z(sign) + projsum);
    }
    for (int m = 1; m <= max_m; ++m)
      for (int l = 1; l < n; ++l)
        for (int r = 0; r < n; ++r) {
          if (l == 1 && r == 0) continue;
          auto d = cat.decompose_tensor(cat.simple(l, r), cat.syz(sign, m, 1, 0));
          RingElement projsum;
          bool found = false;
          for (const auto& [lab, mult] : d) {
            if (lab == cat.syz(sign, m, l, r) && mult == 1) {
              found = true;
            } else if (is_projective(lab, n)) {
              projsum += cls(lab).scaled(mult);
            } else {
              throw ConstructionFailed("unexpected summand deriving syz_corr");
            }
          }
          if (!found) throw ConstructionFailed("Omega^m V(l,r) summand not found");
          T.syz_corr[{sign, m, l, r}] = P.normal_form(
              cls(cat.simple(l, r)) * T.syz_corr.at({sign, m, 1, 0}) + projsum);
        }
  }
  for (const auto& [key, e] : T.syz_corr) {
    auto [sign, m, l, r] = key;
    Int want = Int(l) * Int(2 * n - 1);
    for (int i = 1; i < m; ++i) want *= 2 * n - 1;
    want -= cat.dim_of(cat.syz(sign, m, l, r));
    if (P.dimev(e) != want)
      throw ConstructionFailed("dimension check failed for a syzygy correction");
  }

  // ---- Band corrections ----
  EtaParam eta1 = EtaParam::of(F.one());
  for (int m = 1; m <= max_m; ++m)
    for (int l = 1; l < n; ++l)
      for (int r = 0; r < n; ++r) {
        if (l == 1) {
          T.band_corr[{m, 1, r}] = RingElement::zero();
          continue;
        }
        auto d = cat.decompose_tensor(cat.simple(l, r), cat.band(m, 1, 0, eta1));
        RingElement projsum;
        bool found = false;
        for (const auto& [lab, mult] : d) {
          if (lab.kind == IndecKind::Band && lab.s == m && lab.l == l &&
              lab.r == ((r % n) + n) % n && mult == 1) {
            found = true;
          } else if (is_projective(lab, n)) {
            projsum += cls(lab).scaled(mult);
          } else {
            throw ConstructionFailed("unexpected summand deriving band_corr");
          }
        }
        if (!found) throw ConstructionFailed("M_m(l,r,.) summand not found");
        // Cross-check the closed form sum_{c(l)<=i<=l-1} m [P(n+l-2i, r+i)].
        RingElement want;
        for (int i = c_half(l); i <= l - 1; ++i)
          want += cls(cat.proj(n + l - 2 * i, r + i)).scaled(m);
        want = P.normal_form(want);
        if (projsum != want)
          throw ConstructionFailed("band correction disagrees with closed form");
        T.band_corr[{m, l, r}] = projsum;
      }

  return T;
}

namespace {
using nlohmann::json;
constexpr int kSchemaVersion = 1;
}  // namespace

std::string tables_to_json(const DerivedTables& T) {
  json j;
  j["schema-version"] = kSchemaVersion;
  j["n"] = T.n;
  j["max_m"] = T.max_m;
  json pp = json::array();
  for (const auto& [k, e] : T.proj_poly)
    pp.push_back(json{{"l", k.first}, {"r", k.second}, {"value", ring_to_json(e)}});
  j["proj_poly"] = pp;
  json sc = json::array();
  for (const auto& [k, e] : T.syz_corr)
    sc.push_back(json{{"sign", k[0]}, {"m", k[1]}, {"l", k[2]}, {"r", k[3]},
                      {"value", ring_to_json(e)}});
  j["syz_corr"] = sc;
  json bc = json::array();
  for (const auto& [k, e] : T.band_corr)
    bc.push_back(json{{"m", k[0]}, {"l", k[1]}, {"r", k[2]}, {"value", ring_to_json(e)}});
  j["band_corr"] = bc;
  return j.dump(2) + "\n";
}

DerivedTables tables_from_json(const std::string& text, const CycField& F) {
  json j = json::parse(text);
  if (!j.contains("schema-version") || j["schema-version"].get<int>() != kSchemaVersion)
    throw ParseError("unsupported table schema version");
  DerivedTables T;
  T.n = j.at("n").get<int>();
  T.max_m = j.at("max_m").get<int>();
  if (T.n != F.order()) throw ParseError("table n mismatch");
  for (const auto& e : j.at("proj_poly"))
    T.proj_poly[{e.at("l").get<int>(), e.at("r").get<int>()}] =
        ring_from_json(e.at("value"), F);
  for (const auto& e : j.at("syz_corr"))
    T.syz_corr[{e.at("sign").get<int>(), e.at("m").get<int>(), e.at("l").get<int>(),
                e.at("r").get<int>()}] = ring_from_json(e.at("value"), F);
  for (const auto& e : j.at("band_corr"))
    T.band_corr[{e.at("m").get<int>(), e.at("l").get<int>(), e.at("r").get<int>()}] =
        ring_from_json(e.at("value"), F);
  return T;
}

}  // namespace green
