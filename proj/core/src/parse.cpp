#include "green/parse.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace green {

namespace {

using nlohmann::json;

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("bad rational: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

int expect_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

}  // namespace

json cyc_to_json(const CycNum& x) {
  json coeffs = json::array();
  for (const Rat& r : x.coeffs()) coeffs.push_back(rat_to_string(r));
  return json{{"coeffs", coeffs}};
}

CycNum cyc_from_json(const json& j, const CycField& F) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("CycNum JSON must be {\"coeffs\": [...]}");
  std::vector<Rat> c;
  for (const auto& s : j["coeffs"]) c.push_back(rat_from_string(s.get<std::string>()));
  if ((int)c.size() != F.degree()) throw ParseError("CycNum coeff length mismatch");
  return F.from_coeffs(std::move(c));
}

json eta_to_json(const EtaParam& e) {
  if (e.inf) return json{{"inf", true}};
  return cyc_to_json(e.v);
}

EtaParam eta_from_json(const json& j, const CycField& F) {
  if (j.is_object() && j.contains("inf") && j["inf"].get<bool>())
    return EtaParam::infinity();
  return EtaParam::of(cyc_from_json(j, F));
}

json label_to_json(const IndecLabel& lab) {
  json j;
  switch (lab.kind) {
    case IndecKind::Simple: j["kind"] = "simple"; break;
    case IndecKind::Proj: j["kind"] = "proj"; break;
    case IndecKind::Syz: j["kind"] = "syz"; break;
    case IndecKind::Band: j["kind"] = "band"; break;
  }
  j["l"] = lab.l;
  j["r"] = lab.r;
  if (lab.kind == IndecKind::Syz) {
    j["m"] = lab.m;
    j["sign"] = lab.sign > 0 ? "+" : "-";
  }
  if (lab.kind == IndecKind::Band) {
    j["s"] = lab.s;
    j["eta"] = eta_to_json(lab.eta);
  }
  return j;
}

IndecLabel label_from_json(const json& j, const CycField& F) {
  std::string kind = j.at("kind").get<std::string>();
  IndecLabel lab;
  lab.l = expect_int(j, "l");
  lab.r = expect_int(j, "r");
  if (kind == "simple") {
    lab.kind = IndecKind::Simple;
  } else if (kind == "proj") {
    lab.kind = IndecKind::Proj;
  } else if (kind == "syz") {
    lab.kind = IndecKind::Syz;
    lab.m = expect_int(j, "m");
    lab.sign = j.at("sign").get<std::string>() == "-" ? -1 : +1;
  } else if (kind == "band") {
    lab.kind = IndecKind::Band;
    lab.s = expect_int(j, "s");
    lab.eta = eta_from_json(j.at("eta"), F);
  } else {
    throw ParseError("unknown label kind: " + kind);
  }
  return lab;
}

json ring_to_json(const RingElement& e) {
  json terms = json::array();
  for (const auto& [m, c] : e.terms()) {
    json t;
    t["x"] = m.xe;
    t["y"] = m.ye;
    if (m.zp > 0 && m.zm > 0) throw ParseError("mixed z monomial not serializable");
    if (m.zp > 0)
      t["z"] = json{{"sign", "+"}, {"e", m.zp}};
    else if (m.zm > 0)
      t["z"] = json{{"sign", "-"}, {"e", m.zm}};
    else
      t["z"] = nullptr;
    json ws = json::array();
    for (const auto& [k, ex] : m.w)
      ws.push_back(json{{"m", k.first}, {"eta", eta_to_json(k.second)}, {"e", ex}});
    t["w"] = ws;
    t["coeff"] = c.get_str();
    terms.push_back(t);
  }
  return json{{"terms", terms}};
}

RingElement ring_from_json(const json& j, const CycField& F) {
  RingElement e;
  for (const auto& t : j.at("terms")) {
    Monomial m;
    m.xe = expect_int(t, "x");
    m.ye = expect_int(t, "y");
    if (t.contains("z") && !t["z"].is_null()) {
      int ze = expect_int(t["z"], "e");
      if (t["z"].at("sign").get<std::string>() == "-")
        m.zm = ze;
      else
        m.zp = ze;
    }
    if (t.contains("w"))
      for (const auto& wf : t["w"])
        m.w[{expect_int(wf, "m"), eta_from_json(wf.at("eta"), F)}] = expect_int(wf, "e");
    Int c(t.at("coeff").get<std::string>());
    e.add_term(m, c);
  }
  return e;
}

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// Parse "(l,r" from position p (after the opening paren); returns past ','.
std::pair<int, int> parse_lr(const std::string& s, size_t open, size_t close) {
  std::string body = s.substr(open + 1, close - open - 1);
  size_t comma = body.find(',');
  if (comma == std::string::npos) throw ParseError("expected (l,r) in: " + s);
  return {std::stoi(strip(body.substr(0, comma))), std::stoi(strip(body.substr(comma + 1)))};
}

EtaParam parse_eta_text(const std::string& text, const CycField& F) {
  std::string t = strip(text);
  if (t == "inf" || t == "infinity" || t == "oo") return EtaParam::infinity();
  if (!t.empty() && t[0] == '{') return eta_from_json(json::parse(t), F);
  return EtaParam::of(F.from_rat(rat_from_string(t)));
}

}  // namespace

bool looks_like_label(const std::string& raw) {
  std::string s = strip(raw);
  return s.rfind("V(", 0) == 0 || s.rfind("P(", 0) == 0 ||
         s.rfind("Omega", 0) == 0 || s.rfind("M_", 0) == 0;
}

IndecLabel parse_label(const std::string& raw, ModCat& cat) {
  std::string s = strip(raw);
  try {
    if (s.rfind("V(", 0) == 0) {
      auto [l, r] = parse_lr(s, 1, s.find(')'));
      return cat.simple(l, r);
    }
    if (s.rfind("P(", 0) == 0) {
      auto [l, r] = parse_lr(s, 1, s.find(')'));
      return cat.proj(l, r);
    }
    if (s.rfind("Omega", 0) == 0) {
      size_t p = 5;
      int sign = +1, m = 1;
      if (p < s.size() && s[p] == '^') {
        ++p;
        if (p < s.size() && s[p] == '-') {
          sign = -1;
          ++p;
        }
        size_t q = p;
        while (q < s.size() && isdigit((unsigned char)s[q])) ++q;
        if (q == p) throw ParseError("expected exponent after Omega^");
        m = std::stoi(s.substr(p, q - p));
        p = q;
      }
      while (p < s.size() && s[p] == ' ') ++p;
      if (s.compare(p, 2, "V(") != 0) throw ParseError("expected V(l,r) after Omega");
      auto [l, r] = parse_lr(s, p + 1, s.find(')', p));
      return cat.syz(sign, m, l, r);
    }
    if (s.rfind("M_", 0) == 0) {
      size_t open = s.find('(');
      int sidx = std::stoi(s.substr(2, open - 2));
      size_t semi = s.find(';', open);
      if (semi == std::string::npos) throw ParseError("expected ';eta=' in band label");
      auto [l, r] = parse_lr(s, open, semi);
      size_t eq = s.find('=', semi);
      size_t close = s.rfind(')');
      if (eq == std::string::npos || close == std::string::npos || close < eq)
        throw ParseError("expected eta=... in band label");
      EtaParam eta = parse_eta_text(s.substr(eq + 1, close - eq - 1), cat.field());
      return cat.band(sidx, l, r, eta);
    }
  } catch (const RangeError&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("cannot parse label '" + raw + "': " + e.what());
  }
  throw ParseError("cannot parse label: " + raw);
}

RingElement parse_element(const std::string& raw, ModCat& cat, const Presentation& P,
                          const DerivedTables& T) {
  std::string s = strip(raw);
  if (s.empty()) throw ParseError("empty element");
  if (s[0] == '{') return ring_from_json(json::parse(s), cat.field());

  RingElement result = RingElement::one();
  std::istringstream in(s);
  std::string factor;
  while (std::getline(in, factor, '*')) {
    factor = strip(factor);
    if (factor.empty()) throw ParseError("empty factor in: " + raw);
    if (looks_like_label(factor)) {
      result = result * class_of(parse_label(factor, cat), P, T, cat.field());
      continue;
    }
    // integer literal
    if (factor.find_first_not_of("-0123456789") == std::string::npos) {
      result = result.scaled(Int(factor));
      continue;
    }
    std::string base = factor;
    int exp = 1;
    size_t caret = factor.rfind('^');
    if (caret != std::string::npos && factor.rfind("w_{", 0) != 0) {
      base = strip(factor.substr(0, caret));
      exp = std::stoi(strip(factor.substr(caret + 1)));
      if (exp < 0) throw ParseError("negative exponent in: " + factor);
    }
    RingElement v;
    if (base == "x")
      v = RingElement::var_x(exp);
    else if (base == "y")
      v = RingElement::var_y(exp);
    else if (base == "z+")
      v = RingElement::var_z(+1, exp);
    else if (base == "z-")
      v = RingElement::var_z(-1, exp);
    else if (base == "1")
      v = RingElement::one();
    else if (base.rfind("w_{", 0) == 0) {
      size_t comma = base.find(',');
      size_t close = base.rfind('}');
      if (comma == std::string::npos || close == std::string::npos || close < comma)
        throw ParseError("expected w_{m,eta}: " + base);
      int m = std::stoi(base.substr(3, comma - 3));
      EtaParam eta = parse_eta_text(base.substr(comma + 1, close - comma - 1), cat.field());
      v = RingElement::var_w(m, eta);
    } else {
      throw ParseError("unknown factor: " + factor);
    }
    result = result * v;
  }
  return result;
}

}  // namespace green
