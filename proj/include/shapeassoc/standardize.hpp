#pragma once

#include "shapeassoc/estimates.hpp"
#include "shapeassoc/series.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace shapeassoc {

namespace std_form {

/// F(x) = x - E(x)
struct Center {
    CentralEstimateSpec center;
    friend bool operator==(const Center&, const Center&) = default;
};

/// F(x) = (x - E1(x)) / E2(x), E2(x) != 0
struct CenterScale {
    CentralEstimateSpec center;
    ScaleEstimateSpec scale;
    friend bool operator==(const CenterScale&, const CenterScale&) = default;
};

}  // namespace std_form

using StandardizationSpec = std::variant<std_form::Center, std_form::CenterScale>;

struct StandardizationFlags {
    bool translation_invariant = true;
    bool scale_invariant = false;
    bool scale_proportional = false;
    bool odd = false;
    /// Set to r when sum_i |F(x)_i|^r = 1 for every non-constant x.
    std::optional<double> normal_order;

    [[nodiscard]] bool r_normal(double r) const { return normal_order && *normal_order == r; }
    friend bool operator==(const StandardizationFlags&, const StandardizationFlags&) = default;
};

[[nodiscard]] StandardizationFlags flags(const StandardizationSpec& spec);

void validate(const StandardizationSpec& spec);
[[nodiscard]] std::size_t min_length(const StandardizationSpec& spec);

/// Standard form of x. Throws ConstantSeriesError for CenterScale on a constant series.
[[nodiscard]] std::vector<double> standardize(const StandardizationSpec& spec,
                                              std::span<const double> x);
[[nodiscard]] TimeSeries standardize(const StandardizationSpec& spec, const TimeSeries& x);

/// Named standardizations.
namespace preset {

/// x - AM(x)
[[nodiscard]] StandardizationSpec f1();
/// x - MIN(x)
[[nodiscard]] StandardizationSpec f2();
/// (x - AM(x)) / ||x - AM(x)||_2
[[nodiscard]] StandardizationSpec f3();
/// (x - GMDR_k,m(x)) / ||x - GMDR_k,m(x)||_r
[[nodiscard]] StandardizationSpec f4(double r, std::size_t k, std::size_t m);

/// Parses "F1", "F2", "F3" or "F4(r,k,m)". Throws SpecError otherwise.
[[nodiscard]] StandardizationSpec by_name(const std::string& name);

}  // namespace preset

/// CenterScale(e, MinkowskiDeviation(r, e)): the r-normal standardization built on e.
[[nodiscard]] StandardizationSpec normalized(const CentralEstimateSpec& e, double r = 2.0);

[[nodiscard]] std::string describe(const StandardizationSpec& spec);

}  // namespace shapeassoc
