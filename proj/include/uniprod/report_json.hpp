#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "uniprod/derivation.hpp"

namespace uniprod {

using Json = nlohmann::ordered_json;

Json flags_to_json(const SymmetryFlags& flags);
Json report_to_json(const DerivationReport& r);
Json reports_payload(const std::vector<DerivationReport>& rs);

// The document wrapper every emitter shares: schema version first, then an
// echo of the invocation, then the payload.
Json make_document(const Json& invocation, const Json& payload);

// Stable serialization: two-space indentation, trailing newline.
std::string render_document(const Json& doc);

std::string report_to_text(const DerivationReport& r);
std::string report_to_latex(const DerivationReport& r);

std::string reports_to_text(const std::vector<DerivationReport>& rs);
std::string reports_to_latex(const std::vector<DerivationReport>& rs);

}  // namespace uniprod
