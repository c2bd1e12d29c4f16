#pragma once

#include "engine.hpp"
#include "oracle.hpp"
#include "roots.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace parity {

using Json = nlohmann::ordered_json;

enum class Format { Text, Latex, Json };
const char* format_name(Format f);
Format parse_format(std::string_view text);

// Bumped whenever the engine output for some index may change; stale caches are discarded.
inline constexpr const char* kEngineVersion = "parity-engine/1";

Json lincomb_to_json(const LinComb& c);
LinComb lincomb_from_json(const Json& j);
Json result_to_json(const PliResult& r);
PliResult result_from_json(const Json& j);
Json czv_to_json(const CzvCombination& c);
CzvCombination czv_from_json(const Json& j);
Json report_to_json(const VerifyReport& r);

std::string cons_prod_str(const ConsProd& a, bool latex = false);
std::string render(const LinComb& c, Format f);
std::string render(const LogExpansion& e, Format f);
std::string render(const CzvCombination& c, Format f);

// "PLi_n(z) = ..." in text or LaTeX, or the JSON record; log_basis expands ber factors.
std::string render_result(const PliResult& r, Format f, bool log_basis = false);
std::string render_report(const VerifyReport& r, Format f);

// Left-hand side label for a specialization, e.g. "2 Li_{1,2}(1,-1)".
std::string specialization_lhs(const IndexVector& n, const std::vector<RootOfUnity>& roots, Format f);

}  // namespace parity
