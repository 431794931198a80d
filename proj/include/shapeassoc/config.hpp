#pragma once

#include "shapeassoc/axioms.hpp"
#include "shapeassoc/benchmark.hpp"
#include "shapeassoc/measures.hpp"

#include <json.hpp>

namespace shapeassoc {

using Json = nlohmann::ordered_json;

// JSON mirrors the spec types one-to-one. Unknown keys and wrong types raise
// SpecError naming the offending path.
//
// Estimates accept an object {"type": ...} or a label string ("MDR", "PR_2",
// "TM_2", "GMDR_0,2", "OS_3", "MED", "AM", "MIN", "MAX"). Standardizations
// accept {"center": E}, {"center": E, "scale": S}, {"normalized": E, "r": r},
// {"preset": "F3"}, {"preset": "F4", "r": .., "k": .., "m": ..} or a preset
// string such as "F4(2,0,2)".

[[nodiscard]] Json to_json(const CentralEstimateSpec& e);
[[nodiscard]] Json to_json(const ScaleEstimateSpec& s);
[[nodiscard]] Json to_json(const StandardizationSpec& f);
[[nodiscard]] Json to_json(const DissimilaritySpec& d);
[[nodiscard]] Json to_json(const UTransform& u);
[[nodiscard]] Json to_json(const VTransform& v);
[[nodiscard]] Json to_json(const WTransform& w);
[[nodiscard]] Json to_json(const SimilaritySpec& s);
[[nodiscard]] Json to_json(const MeasureSpec& m);

[[nodiscard]] CentralEstimateSpec central_from_json(const Json& j);
[[nodiscard]] ScaleEstimateSpec scale_from_json(const Json& j);
[[nodiscard]] StandardizationSpec standardization_from_json(const Json& j);
[[nodiscard]] DissimilaritySpec dissimilarity_from_json(const Json& j);
[[nodiscard]] UTransform u_from_json(const Json& j);
[[nodiscard]] VTransform v_from_json(const Json& j);
[[nodiscard]] WTransform w_from_json(const Json& j);
[[nodiscard]] SimilaritySpec similarity_from_json(const Json& j);
[[nodiscard]] MeasureSpec measure_spec_from_json(const Json& j);

/// A measure document: the spec plus an optional "unchecked": true, or one of
/// the strings "pearson" and the grid labels such as "thm1/MDR".
[[nodiscard]] Measure measure_from_json(const Json& j);

/// Accepts the same forms as measure_from_json, plus "label" and "expect"
/// ("all" or "not_all") keys.
[[nodiscard]] BenchmarkMeasure benchmark_measure_from_json(const Json& j);

/// {"dataset": {"path": ...} | {"synthetic": "reality_check" | {...}}, "measures": "grid" | [...],
///  "true_clusters": [[ids...], ...]}
[[nodiscard]] BenchmarkSpec benchmark_from_json(const Json& j);

[[nodiscard]] Json to_json(const PropertyReport& r);
[[nodiscard]] Json to_json(const ImplicationReport& r);
[[nodiscard]] Json to_json(const BenchmarkReport& r);

/// Parses JSON text, wrapping syntax errors in SpecError.
[[nodiscard]] Json parse_json(const std::string& text);
/// Reads and parses a JSON file; IoError if unreadable.
[[nodiscard]] Json read_json(const std::string& path);

}  // namespace shapeassoc
