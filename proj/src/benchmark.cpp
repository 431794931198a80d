#include "shapeassoc/benchmark.hpp"

#include "shapeassoc/cluster.hpp"
#include "shapeassoc/error.hpp"
#include "shapeassoc/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace shapeassoc {

namespace {

constexpr std::uint64_t kBaseStream = 1;
constexpr std::uint64_t kMemberStream = 2;

std::vector<double> base_shape(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    std::vector<double> x(n, 0.0);
    for (int j = 0; j < 3; ++j) {
        const double amplitude = rng.uniform(0.5, 1.5);
        const double cycles = static_cast<double>(rng.integer(1, 8));
        const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
        for (std::size_t t = 0; t < n; ++t) {
            x[t] += amplitude * std::sin(2.0 * std::numbers::pi * cycles * static_cast<double>(t) / static_cast<double>(n) + phase);
        }
    }
    return x;
}

std::vector<std::string> member_ids(const SyntheticCluster& c, std::size_t index) {
    if (!c.ids.empty()) {
        if (c.ids.size() != c.size) throw SpecError("synthetic cluster " + std::to_string(index + 1) + ": ids do not match size");
        return c.ids;
    }
    std::vector<std::string> ids;
    for (std::size_t m = 0; m < c.size; ++m) ids.push_back("c" + std::to_string(index + 1) + "_" + std::to_string(m + 1));
    return ids;
}

std::string grid_name(const CentralEstimateSpec& e) { return describe(e); }

}  // namespace

SyntheticParams reality_check_layout(std::uint64_t seed, double noise_scale) {
    SyntheticParams p;
    p.seed = seed;
    p.noise_scale = noise_scale;
    p.clusters = {
        {4, std::nullopt, {false, false, true, true}, {"1", "4", "9", "10"}},
        {3, std::nullopt, {}, {"2", "3", "5"}},
        {3, std::nullopt, {}, {"6", "7", "8"}},
        {2, std::nullopt, {}, {"11", "12"}},
        {2, std::nullopt, {}, {"13", "14"}},
    };
    for (int i = 1; i <= 14; ++i) p.order.push_back(std::to_string(i));
    return p;
}

SeriesSet generate(const SyntheticParams& p) {
    if (p.clusters.empty()) throw SpecError("synthetic: no clusters");
    if (p.length < 2) throw SpecError("synthetic: length must be >= 2");
    if (!(p.noise_scale >= 0.0) || !std::isfinite(p.noise_scale)) throw SpecError("synthetic: noise_scale must be >= 0");
    std::vector<TimeSeries> series;
    std::size_t global = 0;
    for (std::size_t c = 0; c < p.clusters.size(); ++c) {
        const SyntheticCluster& cl = p.clusters[c];
        if (cl.size < 1) throw SpecError("synthetic cluster " + std::to_string(c + 1) + ": size must be >= 1");
        if (!cl.inverted.empty() && cl.inverted.size() != cl.size) {
            throw SpecError("synthetic cluster " + std::to_string(c + 1) + ": inverted flags do not match size");
        }
        const auto ids = member_ids(cl, c);
        const auto base = base_shape(cl.base_seed.value_or(derive_seed(p.seed, kBaseStream, c)), p.length);
        const auto [lo, hi] = std::minmax_element(base.begin(), base.end());
        const double amplitude = p.noise_scale * (*hi - *lo);
        for (std::size_t m = 0; m < cl.size; ++m, ++global) {
            Rng rng(derive_seed(p.seed, kMemberStream, global));
            const bool inv = !cl.inverted.empty() && cl.inverted[m];
            const double scale = (inv ? -1.0 : 1.0) * rng.uniform(0.5, 2.0);
            const double offset = rng.uniform(-10.0, 10.0);
            std::vector<double> x(p.length);
            for (std::size_t t = 0; t < p.length; ++t) x[t] = scale * base[t] + offset + amplitude * rng.uniform(-1.0, 1.0);
            series.emplace_back(ids[m], std::move(x));
        }
    }
    if (!p.order.empty()) {
        if (p.order.size() != series.size()) throw SpecError("synthetic: order does not list every id");
        std::vector<TimeSeries> ordered;
        for (const auto& id : p.order) {
            const auto it = std::find_if(series.begin(), series.end(), [&](const TimeSeries& s) { return s.id() == id; });
            if (it == series.end()) throw SpecError("synthetic: order names unknown id '" + id + "'");
            ordered.push_back(*it);
        }
        series = std::move(ordered);
    }
    return SeriesSet(std::move(series));
}

std::vector<std::vector<std::string>> planted_clusters(const SyntheticParams& p) {
    std::vector<std::vector<std::string>> out;
    for (std::size_t c = 0; c < p.clusters.size(); ++c) out.push_back(member_ids(p.clusters[c], c));
    return out;
}

std::vector<CentralEstimateSpec> grid_estimates() {
    return {est::Midrange{}, est::Projection{2}, est::Median{}, est::TruncatedMean{2}, est::GeneralizedMidrange{0, 2},
            est::ArithmeticMean{}};
}

std::optional<BenchmarkMeasure> grid_measure(const std::string& label) {
    const auto slash = label.find('/');
    if (slash == std::string::npos) return std::nullopt;
    const std::string method = label.substr(0, slash);
    const std::string name = label.substr(slash + 1);
    for (const auto& e : grid_estimates()) {
        if (grid_name(e) != name) continue;
        const DissimilaritySpec d{2.0, normalized(e, 2.0)};
        if (method == "thm1") return BenchmarkMeasure{label, assoc::Thm1FromD{d, xform::RationalDecay{1.0}}, false, std::nullopt};
        if (method == "prop1") return BenchmarkMeasure{label, assoc::Prop1FromD{d, xform::PowerHalf{2.0}}, false, std::nullopt};
    }
    return std::nullopt;
}

std::vector<BenchmarkMeasure> grid_measures(bool real_data) {
    std::vector<BenchmarkMeasure> out;
    for (const auto& e : grid_estimates()) {
        const bool contains = std::holds_alternative<est::Midrange>(e) || std::holds_alternative<est::Median>(e) ||
                              std::holds_alternative<est::GeneralizedMidrange>(e);
        for (const char* method : {"thm1", "prop1"}) {
            auto m = *grid_measure(std::string(method) + "/" + grid_name(e));
            m.expect = !real_data || contains ? Expectation::All : Expectation::NotAll;
            out.push_back(std::move(m));
        }
    }
    return out;
}

BenchmarkSpec default_benchmark(std::uint64_t seed) {
    BenchmarkSpec b;
    const auto p = reality_check_layout(seed);
    b.true_clusters = planted_clusters(p);
    b.dataset = p;
    b.measures = grid_measures(false);
    return b;
}

BenchmarkSpec real_data_benchmark(DatasetFile file) {
    BenchmarkSpec b;
    // Unlabelled files get generated ids s1, s2, ...
    const std::string prefix = file.has_ids ? "" : "s";
    b.dataset = std::move(file);
    b.measures = grid_measures(true);
    b.true_clusters = planted_clusters(reality_check_layout());
    for (auto& c : b.true_clusters)
        for (auto& id : c) id = prefix + id;
    return b;
}

bool BenchmarkReport::passed() const {
    return std::ranges::all_of(outcomes, [](const MeasureOutcome& o) { return o.meets_expectation; });
}

BenchmarkReport run_benchmark(const BenchmarkSpec& spec) {
    if (const auto* f = std::get_if<DatasetFile>(&spec.dataset)) {
        auto report = run_benchmark(spec, parse_dataset(*f));
        report.dataset = f->path;
        return report;
    }
    const auto& p = std::get<SyntheticParams>(spec.dataset);
    auto report = run_benchmark(spec, generate(p));
    report.dataset = "synthetic(seed=" + std::to_string(p.seed) + ")";
    return report;
}

BenchmarkReport run_benchmark(const BenchmarkSpec& spec, const SeriesSet& data) {
    BenchmarkReport report;
    report.series = data.size();
    report.length = data.length();
    report.true_clusters = spec.true_clusters;
    if (report.true_clusters.empty()) {
        if (const auto* p = std::get_if<SyntheticParams>(&spec.dataset)) report.true_clusters = planted_clusters(*p);
    }
    std::set<std::string> seen;
    for (const auto& c : report.true_clusters) {
        if (c.empty()) throw SpecError("benchmark: empty true cluster");
        for (const auto& id : c) {
            if (!data.find(id)) throw SpecError("benchmark: true cluster names unknown id '" + id + "'");
            if (!seen.insert(id).second) throw SpecError("benchmark: id '" + id + "' is in two true clusters");
        }
    }
    for (const auto& s : data)
        if (is_constant(s)) report.constant_series.push_back(s.id());

    for (const auto& bm : spec.measures) {
        MeasureOutcome out;
        out.label = bm.label;
        out.expect = bm.expect;
        const Measure measure = bm.unchecked ? Measure::unchecked(bm.spec) : Measure(bm.spec);
        out.measure = measure.name();
        if (!report.constant_series.empty()) {
            out.skipped = true;
            out.skip_reason = "constant series present";
        } else if (data.size() < 2) {
            out.skipped = true;
            out.skip_reason = "fewer than 2 series";
        } else {
            try {
                const auto d = single_linkage(SimilarityMatrix::from_association(association_matrix(measure, data)));
                out.all_contained = true;
                for (const auto& c : report.true_clusters) {
                    const bool in = contains_cluster(d, c);
                    out.verdicts.push_back({c, in});
                    out.all_contained = out.all_contained && in;
                }
                out.newick = to_newick(d);
            } catch (const Error& e) {
                out.skipped = true;
                out.skip_reason = e.what();
            }
        }
        if (out.expect) {
            out.meets_expectation = !out.skipped && (*out.expect == Expectation::All) == out.all_contained;
        }
        report.outcomes.push_back(std::move(out));
    }
    return report;
}

}  // namespace shapeassoc
