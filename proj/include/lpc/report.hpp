#pragma once

#include <span>
#include <string>

#include "json.hpp"
#include "lpc/analysis.hpp"

namespace lpc {

using Json = nlohmann::ordered_json;

Json to_json(const Polynomial& p, std::span<const std::string> labels);
Json to_json(const MultiVector& m, std::span<const std::string> labels);
/// Nonzero brackets as {"[a,b]": "linear form"}.
Json brackets_json(const LieAlgebra& l);
Json to_json(const ContractionResult& r, std::span<const std::string> labels);
Json to_json(const GeneratorSet& s);
Json to_json(const KostantReport& r, std::span<const std::string> labels);
Json to_json(const ContrDegReport& r, std::span<const std::string> labels);
Json to_json(const FundamentalSemiInvariant& f, std::span<const std::string> labels);
Json to_json(const SuiteReport& r);

/// Plain-text rendering of a payload: one "key: value" line per scalar leaf.
std::string render_text(const Json& payload);

}  // namespace lpc
