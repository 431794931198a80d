#pragma once

#include "shapeassoc/io.hpp"
#include "shapeassoc/measures.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace shapeassoc {

/// One planted cluster: members are p * base + q + noise, p < 0 for inverted members.
struct SyntheticCluster {
    std::size_t size = 1;
    /// Seed of the base shape; derived from the generator seed when absent.
    std::optional<std::uint64_t> base_seed;
    /// Per-member inversion flags; empty means none inverted.
    std::vector<bool> inverted;
    /// Member ids; generated as "c<cluster>_<member>" when empty.
    std::vector<std::string> ids;

    friend bool operator==(const SyntheticCluster&, const SyntheticCluster&) = default;
};

struct SyntheticParams {
    std::vector<SyntheticCluster> clusters;
    std::size_t length = 365;
    /// Noise amplitude as a fraction of the base shape's range.
    double noise_scale = 0.05;
    std::uint64_t seed = 0;
    /// Output order of the ids; empty keeps cluster order.
    std::vector<std::string> order;

    friend bool operator==(const SyntheticParams&, const SyntheticParams&) = default;
};

/// Five clusters with the RealityCheck layout: {1,4,9,10} (9 and 10 inverted),
/// {2,3,5}, {6,7,8}, {11,12}, {13,14}. Series are ordered 1..14.
[[nodiscard]] SyntheticParams reality_check_layout(std::uint64_t seed = 0, double noise_scale = 0.05);

/// Seeded dataset; each base is a sum of three sinusoids with random phase.
[[nodiscard]] SeriesSet generate(const SyntheticParams& p);

/// Planted clusters of the parameters, as id sets.
[[nodiscard]] std::vector<std::vector<std::string>> planted_clusters(const SyntheticParams& p);

enum class Expectation { All, NotAll };

struct BenchmarkMeasure {
    std::string label;
    MeasureSpec spec;
    bool unchecked = false;
    /// Whether every true cluster should appear in the dendrogram.
    std::optional<Expectation> expect;

    friend bool operator==(const BenchmarkMeasure&, const BenchmarkMeasure&) = default;
};

struct BenchmarkSpec {
    std::variant<DatasetFile, SyntheticParams> dataset;
    std::vector<BenchmarkMeasure> measures;
    /// Defaults to the planted clusters of a synthetic dataset.
    std::vector<std::vector<std::string>> true_clusters;
};

/// The six central estimates of the grid.
[[nodiscard]] std::vector<CentralEstimateSpec> grid_estimates();

/// "thm1/<E>" or "prop1/<E>" for E among MDR, PR_2, MED, TM_2, GMDR_0,2, AM:
/// Thm1FromD with U = 1/(D+1) or Prop1FromD with W = (D/2)^2, r = 2, over
/// (x - E(x)) / DEV_2(E)(x). Returns nullopt for other labels.
[[nodiscard]] std::optional<BenchmarkMeasure> grid_measure(const std::string& label);

/// All twelve grid measures. With real_data, MDR, MED and GMDR expect all
/// clusters and PR_2, TM_2 and AM expect a miss; otherwise all expect all.
[[nodiscard]] std::vector<BenchmarkMeasure> grid_measures(bool real_data);

/// Synthetic RealityCheck layout with the full grid.
[[nodiscard]] BenchmarkSpec default_benchmark(std::uint64_t seed = 0);

/// A user-supplied data file with the real-data expectations and the RealityCheck true clusters.
[[nodiscard]] BenchmarkSpec real_data_benchmark(DatasetFile file);

struct ClusterVerdict {
    std::vector<std::string> cluster;
    bool contained = false;
};

struct MeasureOutcome {
    std::string label;
    std::string measure;
    bool skipped = false;
    std::string skip_reason;
    std::vector<ClusterVerdict> verdicts;
    bool all_contained = false;
    std::optional<Expectation> expect;
    bool meets_expectation = true;
    std::string newick;
};

struct BenchmarkReport {
    std::string dataset;
    std::size_t series = 0;
    std::size_t length = 0;
    std::vector<std::string> constant_series;
    std::vector<std::vector<std::string>> true_clusters;
    std::vector<MeasureOutcome> outcomes;

    [[nodiscard]] bool passed() const;
};

/// Throws SpecError for overlapping or unknown true clusters.
[[nodiscard]] BenchmarkReport run_benchmark(const BenchmarkSpec& spec);
[[nodiscard]] BenchmarkReport run_benchmark(const BenchmarkSpec& spec, const SeriesSet& data);

}  // namespace shapeassoc
