#include "shapeassoc/estimates.hpp"

#include "shapeassoc/error.hpp"
#include "shapeassoc/numfmt.hpp"
#include "overloaded.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace shapeassoc {
namespace {

using detail::overloaded;

constexpr double kWeightSumTolerance = 1e-9;

void check_weights(const std::vector<double>& w, const char* what) {
    if (w.size() < 2) {
        throw SpecError(std::string(what) + ": need at least 2 weights");
    }
    double sum = 0.0;
    for (double v : w) {
        if (!std::isfinite(v) || v < 0.0) {
            throw SpecError(std::string(what) + ": weights must be finite and nonnegative");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kWeightSumTolerance) {
        throw SpecError(std::string(what) + ": weights sum to " + format_roundtrip(sum) +
                        ", expected 1");
    }
}

std::vector<double> sorted_copy(std::span<const double> x) {
    std::vector<double> s(x.begin(), x.end());
    std::stable_sort(s.begin(), s.end());
    return s;
}

// Sum of s[first, last) in index order.
double range_sum(const std::vector<double>& s, std::size_t first, std::size_t last) {
    return std::accumulate(s.begin() + static_cast<std::ptrdiff_t>(first),
                           s.begin() + static_cast<std::ptrdiff_t>(last), 0.0);
}

}  // namespace

void validate(const CentralEstimateSpec& spec) {
    std::visit(overloaded{
                   [](const est::Projection& p) {
                       if (p.k < 1) throw SpecError("PR_k: k must be >= 1");
                   },
                   [](const est::OrderStatistic& p) {
                       if (p.k < 1) throw SpecError("OS_k: k must be >= 1");
                   },
                   [](const est::GeneralizedMidrange& g) {
                       if (g.k >= g.m) throw SpecError("GMDR_k,m: requires 0 <= k < m");
                   },
                   [](const est::WeightedMean& w) { check_weights(w.weights, "WAM"); },
                   [](const est::OrderedWeightedMean& w) { check_weights(w.weights, "OWA"); },
                   [](const auto&) {},
               },
               spec);
}

void validate(const ScaleEstimateSpec& spec) {
    if (const auto* md = std::get_if<est::MinkowskiDeviation>(&spec)) {
        if (!std::isfinite(md->r) || md->r < 1.0) {
            throw SpecError("Minkowski deviation: r must be >= 1, got " + format_roundtrip(md->r));
        }
        validate(md->center);
    }
}

std::size_t min_length(const CentralEstimateSpec& spec) {
    return std::visit(overloaded{
                          [](const est::Projection& p) { return std::max<std::size_t>(2, p.k); },
                          [](const est::OrderStatistic& p) { return std::max<std::size_t>(2, p.k); },
                          [](const est::TruncatedMean& t) { return std::max<std::size_t>(2, 2 * t.m + 1); },
                          [](const est::GeneralizedMidrange& g) {
                              return std::max<std::size_t>(2, 2 * g.m + 1);
                          },
                          [](const est::WeightedMean& w) { return std::max<std::size_t>(2, w.weights.size()); },
                          [](const est::OrderedWeightedMean& w) {
                              return std::max<std::size_t>(2, w.weights.size());
                          },
                          [](const auto&) -> std::size_t { return 2; },
                      },
                      spec);
}

std::size_t min_length(const ScaleEstimateSpec& spec) {
    if (const auto* md = std::get_if<est::MinkowskiDeviation>(&spec)) return min_length(md->center);
    return 2;
}

void validate(const CentralEstimateSpec& spec, std::size_t n) {
    validate(spec);
    auto fail = [&](const std::string& msg) {
        throw SpecError(describe(spec) + ": " + msg + " (n=" + std::to_string(n) + ")");
    };
    std::visit(overloaded{
                   [&](const est::Projection& p) {
                       if (p.k > n) fail("k exceeds series length");
                   },
                   [&](const est::OrderStatistic& p) {
                       if (p.k > n) fail("k exceeds series length");
                   },
                   [&](const est::TruncatedMean& t) {
                       if (2 * t.m >= n) fail("requires m < n/2");
                   },
                   [&](const est::GeneralizedMidrange& g) {
                       if (2 * g.m >= n) fail("requires m < n/2");
                   },
                   [&](const est::WeightedMean& w) {
                       if (w.weights.size() != n) fail("weight count differs from series length");
                   },
                   [&](const est::OrderedWeightedMean& w) {
                       if (w.weights.size() != n) fail("weight count differs from series length");
                   },
                   [](const auto&) {},
               },
               spec);
}

double central(const CentralEstimateSpec& spec, std::span<const double> x) {
    validate(spec, x.size());
    const std::size_t n = x.size();
    return std::visit(
        overloaded{
            [&](const est::Min&) { return *std::ranges::min_element(x); },
            [&](const est::Max&) { return *std::ranges::max_element(x); },
            [&](const est::Midrange&) {
                auto [lo, hi] = std::ranges::minmax_element(x);
                return (*lo + *hi) / 2.0;
            },
            [&](const est::Projection& p) { return x[p.k - 1]; },
            [&](const est::OrderStatistic& p) {
                std::vector<double> s(x.begin(), x.end());
                auto nth = s.begin() + static_cast<std::ptrdiff_t>(p.k - 1);
                std::nth_element(s.begin(), nth, s.end());
                return *nth;
            },
            [&](const est::Median&) {
                const auto s = sorted_copy(x);
                if (n % 2 == 1) return s[n / 2];
                return (s[n / 2 - 1] + s[n / 2]) / 2.0;
            },
            [&](const est::TruncatedMean& t) {
                const auto s = sorted_copy(x);
                return range_sum(s, t.m, n - t.m) / static_cast<double>(n - 2 * t.m);
            },
            [&](const est::GeneralizedMidrange& g) {
                const auto s = sorted_copy(x);
                const double low = range_sum(s, g.k, g.m);
                const double high = range_sum(s, n - g.m, n - g.k);
                return (low + high) / (2.0 * static_cast<double>(g.m - g.k));
            },
            [&](const est::ArithmeticMean&) {
                return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
            },
            [&](const est::WeightedMean& w) {
                return std::inner_product(x.begin(), x.end(), w.weights.begin(), 0.0);
            },
            [&](const est::OrderedWeightedMean& w) {
                const auto s = sorted_copy(x);
                return std::inner_product(s.begin(), s.end(), w.weights.begin(), 0.0);
            },
        },
        spec);
}

double scale(const ScaleEstimateSpec& spec, std::span<const double> x) {
    validate(spec);
    return std::visit(overloaded{
                          [&](const est::Range&) {
                              auto [lo, hi] = std::ranges::minmax_element(x);
                              return *hi - *lo;
                          },
                          [&](const est::MinkowskiDeviation& md) {
                              const double c = central(md.center, x);
                              double sum = 0.0;
                              if (md.r == 2.0) {
                                  for (double v : x) sum += (v - c) * (v - c);
                                  return std::sqrt(sum);
                              }
                              for (double v : x) sum += std::pow(std::abs(v - c), md.r);
                              return md.r == 1.0 ? sum : std::pow(sum, 1.0 / md.r);
                          },
                      },
                      spec);
}

EstimateTraits estimate_traits(const CentralEstimateSpec& spec) {
    const bool odd = std::visit(overloaded{
                                    [](const est::Midrange&) { return true; },
                                    [](const est::Projection&) { return true; },
                                    [](const est::Median&) { return true; },
                                    [](const est::TruncatedMean&) { return true; },
                                    [](const est::GeneralizedMidrange&) { return true; },
                                    [](const est::ArithmeticMean&) { return true; },
                                    [](const est::WeightedMean&) { return true; },
                                    // OWA is odd only for symmetric weights; not claimed.
                                    [](const auto&) { return false; },
                                },
                                spec);
    return EstimateTraits{.translation_additive = true, .scale_proportional = true, .odd = odd};
}

bool is_even(const ScaleEstimateSpec& spec) {
    if (const auto* md = std::get_if<est::MinkowskiDeviation>(&spec)) {
        return estimate_traits(md->center).odd;
    }
    return true;
}

std::string describe(const CentralEstimateSpec& spec) {
    return std::visit(overloaded{
                          [](const est::Min&) -> std::string { return "MIN"; },
                          [](const est::Max&) -> std::string { return "MAX"; },
                          [](const est::Midrange&) -> std::string { return "MDR"; },
                          [](const est::Projection& p) { return "PR_" + std::to_string(p.k); },
                          [](const est::OrderStatistic& p) { return "OS_" + std::to_string(p.k); },
                          [](const est::Median&) -> std::string { return "MED"; },
                          [](const est::TruncatedMean& t) { return "TM_" + std::to_string(t.m); },
                          [](const est::GeneralizedMidrange& g) {
                              return "GMDR_" + std::to_string(g.k) + "," + std::to_string(g.m);
                          },
                          [](const est::ArithmeticMean&) -> std::string { return "AM"; },
                          [](const est::WeightedMean&) -> std::string { return "WAM"; },
                          [](const est::OrderedWeightedMean&) -> std::string { return "OWA"; },
                      },
                      spec);
}

std::string describe(const ScaleEstimateSpec& spec) {
    return std::visit(overloaded{
                          [](const est::Range&) -> std::string { return "R"; },
                          [](const est::MinkowskiDeviation& md) {
                              return "DEV_" + format_roundtrip(md.r) + "(" + describe(md.center) + ")";
                          },
                      },
                      spec);
}

}  // namespace shapeassoc
