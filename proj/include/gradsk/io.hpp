#pragma once

#include <string>

#include "gradsk/valued.hpp"

// vendored single-header nlohmann/json
#include <json.hpp>

namespace gradsk {

using json = nlohmann::json;

// Parsed job input. A document either describes a presentation (+ optional
// involution) or a valued symbol algebra, never both.
struct InputDocument {
  std::optional<AlgebraPresentation> presentation;
  std::optional<InvolutionDescriptor> involution;
  std::optional<ValuedSymbolInput> valued;
};

// strict parse: unknown fields are rejected with a named path
InputDocument parse_input(const json& doc);
InputDocument parse_input_text(const std::string& text);

// integers render as JSON numbers up to 2^63-1 and as decimal strings above
json int_to_json(const Int& x);
Int json_to_int(const json& j, const std::string& path);

// "1", "Z", "Z/2 + Z/4", ...
std::string render_group(const FGAbGroup& g);

json group_to_json(const FGAbGroup& g);
json sk_result_to_json(const SKResult& r);
json classify_to_json(const ClassifyReport& c);
json bridge_to_json(const BridgeResult& b);
json certificate_to_json(const BridgeCertificate& c);

// canonical serialization used for the byte-identical determinism contract
std::string render_report(const json& report);

// toex-style shortcut: r-list, mu order, theta multiplier
ValuedSymbolInput toex_input(const std::vector<Int>& rs, const Int& m,
                             const Int& u, const Int& residue_char = 0);

}  // namespace gradsk
