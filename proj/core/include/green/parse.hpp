#pragma once

#include <nlohmann/json_fwd.hpp>

#include "green/greenring.hpp"

namespace green {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// JSON encodings (schemas shared by the CLI and the table cache).
nlohmann::json cyc_to_json(const CycNum& x);
CycNum cyc_from_json(const nlohmann::json& j, const CycField& F);
nlohmann::json eta_to_json(const EtaParam& e);
EtaParam eta_from_json(const nlohmann::json& j, const CycField& F);
nlohmann::json label_to_json(const IndecLabel& lab);
IndecLabel label_from_json(const nlohmann::json& j, const CycField& F);
nlohmann::json ring_to_json(const RingElement& e);
RingElement ring_from_json(const nlohmann::json& j, const CycField& F);

/// Label shorthand: V(l,r) | P(l,r) | Omega^m V(l,r) | Omega^-m V(l,r)
/// | M_s(l,r;eta=<rational|inf|cyc-json>).
IndecLabel parse_label(const std::string& s, ModCat& cat);
bool looks_like_label(const std::string& s);

/// Ring-element shorthand: '*'-separated factors, each an integer, a power of
/// x | y | z+ | z- | w_{m,eta}, or a label (replaced by its class); a leading
/// '{' switches to the RingElement JSON schema.
RingElement parse_element(const std::string& s, ModCat& cat, const Presentation& P,
                          const DerivedTables& T);

}  // namespace green
