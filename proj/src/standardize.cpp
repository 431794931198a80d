#include "shapeassoc/standardize.hpp"

#include "shapeassoc/error.hpp"
#include "shapeassoc/numfmt.hpp"
#include "overloaded.hpp"

#include <charconv>
#include <cmath>
#include <regex>

namespace shapeassoc {

using detail::overloaded;

StandardizationFlags flags(const StandardizationSpec& spec) {
    return std::visit(overloaded{
                          [](const std_form::Center& c) {
                              const auto t = estimate_traits(c.center);
                              return StandardizationFlags{.translation_invariant = t.translation_additive,
                                                          .scale_invariant = false,
                                                          .scale_proportional = t.scale_proportional,
                                                          .odd = t.odd,
                                                          .normal_order = std::nullopt};
                          },
                          [](const std_form::CenterScale& c) {
                              const auto t = estimate_traits(c.center);
                              StandardizationFlags f{.translation_invariant = t.translation_additive,
                                                     .scale_invariant = t.scale_proportional,
                                                     .scale_proportional = false,
                                                     .odd = t.odd && is_even(c.scale),
                                                     .normal_order = std::nullopt};
                              if (const auto* md = std::get_if<est::MinkowskiDeviation>(&c.scale)) {
                                  if (md->center == c.center) f.normal_order = md->r;
                              }
                              return f;
                          },
                      },
                      spec);
}

void validate(const StandardizationSpec& spec) {
    std::visit(overloaded{
                   [](const std_form::Center& c) { validate(c.center); },
                   [](const std_form::CenterScale& c) {
                       validate(c.center);
                       validate(c.scale);
                   },
               },
               spec);
}

std::size_t min_length(const StandardizationSpec& spec) {
    return std::visit(overloaded{
                          [](const std_form::Center& c) { return min_length(c.center); },
                          [](const std_form::CenterScale& c) {
                              return std::max(min_length(c.center), min_length(c.scale));
                          },
                      },
                      spec);
}

std::vector<double> standardize(const StandardizationSpec& spec, std::span<const double> x) {
    // Estimates are evaluated on x - x_0. Every estimate here is translation additive
    // (scales translation invariant), so this is the same transform, but the
    // deviations keep their precision when the series sits far from zero.
    std::vector<double> out(x.size());
    const double origin = x.front();
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - origin;

    std::visit(overloaded{
                   [&](const std_form::Center& c) {
                       const double e = central(c.center, out);
                       for (double& v : out) v -= e;
                   },
                   [&](const std_form::CenterScale& c) {
                       if (is_constant(x)) {
                           throw ConstantSeriesError("center-scale standardization of a constant series");
                       }
                       const double e1 = central(c.center, out);
                       const double e2 = scale(c.scale, out);
                       if (!(e2 > 0.0) || !std::isfinite(e2)) {
                           throw ConstantSeriesError("scale estimate " + describe(c.scale) + " is " +
                                                     format_roundtrip(e2));
                       }
                       for (double& v : out) v = (v - e1) / e2;
                   },
               },
               spec);
    return out;
}

TimeSeries standardize(const StandardizationSpec& spec, const TimeSeries& x) {
    return TimeSeries(x.id(), standardize(spec, x.values()));
}

namespace preset {

StandardizationSpec f1() { return std_form::Center{est::ArithmeticMean{}}; }

StandardizationSpec f2() { return std_form::Center{est::Min{}}; }

StandardizationSpec f3() { return normalized(est::ArithmeticMean{}, 2.0); }

StandardizationSpec f4(double r, std::size_t k, std::size_t m) {
    if (!std::isfinite(r) || r < 1.0) {
        throw SpecError("F4: r must be >= 1, got " + format_roundtrip(r));
    }
    if (k >= m) {
        throw SpecError("F4: requires 0 <= k < m");
    }
    return normalized(est::GeneralizedMidrange{k, m}, r);
}

StandardizationSpec by_name(const std::string& name) {
    if (name == "F1") return f1();
    if (name == "F2") return f2();
    if (name == "F3") return f3();
    static const std::regex f4_re(R"(F4\(\s*([0-9.eE+-]+)\s*,\s*([0-9]+)\s*,\s*([0-9]+)\s*\))");
    std::smatch m;
    if (std::regex_match(name, m, f4_re)) {
        try {
            return f4(std::stod(m[1]), std::stoul(m[2]), std::stoul(m[3]));
        } catch (const std::logic_error&) {
            throw SpecError("bad F4 parameters in '" + name + "'");
        }
    }
    throw SpecError("unknown standardization preset '" + name + "'");
}

}  // namespace preset

StandardizationSpec normalized(const CentralEstimateSpec& e, double r) {
    return std_form::CenterScale{e, est::MinkowskiDeviation{r, e}};
}

std::string describe(const StandardizationSpec& spec) {
    return std::visit(overloaded{
                          [](const std_form::Center& c) { return "x-" + describe(c.center); },
                          [](const std_form::CenterScale& c) {
                              return "(x-" + describe(c.center) + ")/" + describe(c.scale);
                          },
                      },
                      spec);
}

}  // namespace shapeassoc
