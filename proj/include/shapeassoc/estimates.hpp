#pragma once

#include "shapeassoc/series.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace shapeassoc {

/// Location estimates (means). Indices k are 1-based, as in x_(1) <= ... <= x_(n).
namespace est {

struct Min {
    friend bool operator==(const Min&, const Min&) = default;
};
struct Max {
    friend bool operator==(const Max&, const Max&) = default;
};
struct Midrange {
    friend bool operator==(const Midrange&, const Midrange&) = default;
};
/// The k-th element in original (time) order.
struct Projection {
    std::size_t k = 1;
    friend bool operator==(const Projection&, const Projection&) = default;
};
/// The k-th lowest value.
struct OrderStatistic {
    std::size_t k = 1;
    friend bool operator==(const OrderStatistic&, const OrderStatistic&) = default;
};
struct Median {
    friend bool operator==(const Median&, const Median&) = default;
};
/// Mean of x_(m+1) .. x_(n-m); requires 2m < n.
struct TruncatedMean {
    std::size_t m = 0;
    friend bool operator==(const TruncatedMean&, const TruncatedMean&) = default;
};
/// Average of x_(k+1)..x_(m) and x_(n-m+1)..x_(n-k); requires 0 <= k < m, 2m < n.
struct GeneralizedMidrange {
    std::size_t k = 0;
    std::size_t m = 1;
    friend bool operator==(const GeneralizedMidrange&, const GeneralizedMidrange&) = default;
};
struct ArithmeticMean {
    friend bool operator==(const ArithmeticMean&, const ArithmeticMean&) = default;
};
/// sum_j w_j x_j; weights nonnegative, summing to 1 within 1e-9, length n.
struct WeightedMean {
    std::vector<double> weights;
    friend bool operator==(const WeightedMean&, const WeightedMean&) = default;
};
/// sum_j w_j x_(j).
struct OrderedWeightedMean {
    std::vector<double> weights;
    friend bool operator==(const OrderedWeightedMean&, const OrderedWeightedMean&) = default;
};

}  // namespace est

using CentralEstimateSpec =
    std::variant<est::Min, est::Max, est::Midrange, est::Projection, est::OrderStatistic,
                 est::Median, est::TruncatedMean, est::GeneralizedMidrange, est::ArithmeticMean,
                 est::WeightedMean, est::OrderedWeightedMean>;

namespace est {

struct Range {
    friend bool operator==(const Range&, const Range&) = default;
};
/// (sum_i |x_i - center(x)|^r)^(1/r)
struct MinkowskiDeviation {
    double r = 2.0;
    CentralEstimateSpec center = ArithmeticMean{};
    friend bool operator==(const MinkowskiDeviation&, const MinkowskiDeviation&) = default;
};

}  // namespace est

using ScaleEstimateSpec = std::variant<est::Range, est::MinkowskiDeviation>;

struct EstimateTraits {
    bool translation_additive = false;
    bool scale_proportional = false;
    bool odd = false;
    friend bool operator==(const EstimateTraits&, const EstimateTraits&) = default;
};

/// Throws SpecError when `spec` cannot be evaluated on series of length n.
void validate(const CentralEstimateSpec& spec, std::size_t n);

/// Parameter checks that do not depend on n (k < m, r >= 1, weight sanity).
void validate(const CentralEstimateSpec& spec);
void validate(const ScaleEstimateSpec& spec);

/// Smallest series length the estimate can be evaluated on.
[[nodiscard]] std::size_t min_length(const CentralEstimateSpec& spec);
[[nodiscard]] std::size_t min_length(const ScaleEstimateSpec& spec);

[[nodiscard]] double central(const CentralEstimateSpec& spec, std::span<const double> x);
[[nodiscard]] inline double central(const CentralEstimateSpec& spec, const TimeSeries& x) {
    return central(spec, x.values());
}

[[nodiscard]] double scale(const ScaleEstimateSpec& spec, std::span<const double> x);
[[nodiscard]] inline double scale(const ScaleEstimateSpec& spec, const TimeSeries& x) {
    return scale(spec, x.values());
}

[[nodiscard]] EstimateTraits estimate_traits(const CentralEstimateSpec& spec);

/// Evenness of the scale estimate: E2(-x) = E2(x).
[[nodiscard]] bool is_even(const ScaleEstimateSpec& spec);

/// Short label such as "MDR", "PR_2", "GMDR_0,2".
[[nodiscard]] std::string describe(const CentralEstimateSpec& spec);
[[nodiscard]] std::string describe(const ScaleEstimateSpec& spec);

}  // namespace shapeassoc
