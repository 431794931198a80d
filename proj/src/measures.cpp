#include "shapeassoc/measures.hpp"

#include "shapeassoc/error.hpp"
#include "shapeassoc/numfmt.hpp"
#include "overloaded.hpp"

#include <algorithm>
#include <cmath>

namespace shapeassoc {

using detail::overloaded;

namespace {

// Slack for D slightly above h from rounding (r-normal forms give D <= 2 exactly in theory).
constexpr double kDomainSlack = 1e-12;

void require_positive(double v, const char* what) {
    if (!std::isfinite(v) || !(v > 0.0)) {
        throw SpecError(std::string(what) + " must be positive and finite, got " + format_roundtrip(v));
    }
}

double minkowski(std::span<const double> a, std::span<const double> b, double r) {
    double sum = 0.0;
    if (r == 2.0) {
        for (std::size_t i = 0; i < a.size(); ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
        return std::sqrt(sum);
    }
    if (r == 1.0) {
        for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
        return sum;
    }
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::pow(std::abs(a[i] - b[i]), r);
    return std::pow(sum, 1.0 / r);
}

double dot(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

std::vector<double> negated(std::span<const double> x) {
    std::vector<double> out(x.size());
    std::ranges::transform(x, out.begin(), [](double v) { return -v; });
    return out;
}

void require_same_length(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw ShapeError("series lengths differ: " + std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()));
    }
}

void require_non_constant(std::span<const double> x) {
    if (is_constant(x)) throw ConstantSeriesError("association is undefined for a constant series");
}

// x - c(x), evaluated as (x - x_0) - c(x - x_0).
std::vector<double> deviations(const CentralEstimateSpec& c, std::span<const double> x, double& center) {
    std::vector<double> dev(x.size());
    const double origin = x.front();
    for (std::size_t i = 0; i < x.size(); ++i) dev[i] = x[i] - origin;
    const double e = central(c, dev);
    for (double& v : dev) v -= e;
    center = e + origin;
    return dev;
}

bool is_tie(double a, double b) {
    return std::abs(a - b) <= kBranchTieTolerance * std::max({1.0, a, b});
}

double branch(double u_direct, double u_reflected, double d_direct, double d_reflected) {
    if (is_tie(d_direct, d_reflected)) return 0.0;
    return d_direct < d_reflected ? u_direct : -u_reflected;
}

const DissimilaritySpec* dissimilarity_of(const MeasureSpec& spec) {
    return std::visit(overloaded{
                          [](const assoc::Thm1FromD& m) { return &m.dissimilarity; },
                          [](const assoc::Prop1FromD& m) { return &m.dissimilarity; },
                          [](const assoc::Thm1FromS& m) { return &m.similarity.dissimilarity; },
                          [](const assoc::Thm2FromS& m) { return &m.similarity.dissimilarity; },
                          [](const assoc::Cor1FromS& m) { return &m.similarity.dissimilarity; },
                          [](const auto&) -> const DissimilaritySpec* { return nullptr; },
                      },
                      spec);
}

}  // namespace

void validate(const DissimilaritySpec& spec) {
    if (!std::isfinite(spec.r) || spec.r < 1.0) {
        throw SpecError("Minkowski order r must be >= 1, got " + format_roundtrip(spec.r));
    }
    validate(spec.standardization);
}

void validate(const WTransform& w) { require_positive(w.p, "W exponent p"); }

void validate(const UTransform& u) {
    std::visit(overloaded{
                   [](const xform::RationalDecay& t) { require_positive(t.k, "U constant K"); },
                   [](const xform::ExpDecay&) {},
                   [](const xform::OneMinusW& t) {
                       validate(t.w);
                       require_positive(t.h, "U bound h");
                       if (apply(t.w, t.h) > 1.0) {
                           throw SpecError("1 - W(D) needs W(h) <= 1, got W(" + format_roundtrip(t.h) +
                                           ") = " + format_roundtrip(apply(t.w, t.h)));
                       }
                   },
               },
               u);
}

void validate(const VTransform& v) {
    if (const auto* lc = std::get_if<xform::LinearComplement>(&v)) require_positive(lc->k, "V constant K");
}

void validate(const SimilaritySpec& spec) {
    validate(spec.dissimilarity);
    validate(spec.u);
}

double dissimilarity(const DissimilaritySpec& spec, std::span<const double> x, std::span<const double> y) {
    validate(spec);
    require_same_length(x, y);
    return minkowski(standardize(spec.standardization, x), standardize(spec.standardization, y), spec.r);
}

double dissimilarity(const DissimilaritySpec& spec, const TimeSeries& x, const TimeSeries& y) {
    return dissimilarity(spec, x.values(), y.values());
}

double apply(const WTransform& w, double d) { return std::pow(d / 2.0, w.p); }

double similarity_from_dissimilarity(const UTransform& u, double d) {
    if (std::isnan(d) || d < 0.0) {
        throw DomainError("dissimilarity must be nonnegative, got " + format_roundtrip(d));
    }
    return std::visit(overloaded{
                          [d](const xform::RationalDecay& t) { return t.k / (d + t.k); },
                          [d](const xform::ExpDecay&) { return std::exp(-d); },
                          [d](const xform::OneMinusW& t) {
                              if (d > t.h * (1.0 + kDomainSlack)) {
                                  throw DomainError("dissimilarity " + format_roundtrip(d) +
                                                    " exceeds the bound h = " + format_roundtrip(t.h));
                              }
                              return 1.0 - apply(t.w, std::min(d, t.h));
                          },
                      },
                      u);
}

double dissimilarity_from_similarity(const VTransform& v, double s) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw DomainError("similarity must lie in [0,1], got " + format_roundtrip(s));
    }
    return std::visit(overloaded{
                          [s](const xform::LinearComplement& t) { return t.k * (1.0 - s); },
                          [s](const xform::OneMinus&) { return 1.0 - s; },
                      },
                      v);
}

double similarity(const SimilaritySpec& spec, std::span<const double> x, std::span<const double> y) {
    validate(spec.u);
    return similarity_from_dissimilarity(spec.u, dissimilarity(spec.dissimilarity, x, y));
}

double similarity(const SimilaritySpec& spec, const TimeSeries& x, const TimeSeries& y) {
    return similarity(spec, x.values(), y.values());
}

Measure::Measure(MeasureSpec spec) : Measure(std::move(spec), true) {}

Measure Measure::unchecked(MeasureSpec spec) { return Measure(std::move(spec), false); }

Measure::Measure(MeasureSpec spec, bool strict) : spec_(std::move(spec)) {
    auto reject = [&](const std::string& why) {
        if (strict) throw SpecError(why);
        verified_ = false;
    };

    if (const auto* d = dissimilarity_of(spec_)) {
        validate(*d);
        const auto f = flags(d->standardization);
        scale_invariant_ = f.scale_invariant;
        min_length_ = shapeassoc::min_length(d->standardization);
        const std::string fname = describe(d->standardization);

        std::visit(
            overloaded{
                [&](const assoc::Thm1FromD& m) {
                    validate(m.u);
                    if (!f.translation_invariant || !f.odd) {
                        reject("branch constructor needs a translation invariant odd standardization, got " +
                               fname);
                    }
                    if (std::holds_alternative<xform::OneMinusW>(m.u) && !f.r_normal(d->r)) {
                        reject("1 - W(D) needs an r-normal standardization with r = " +
                               format_roundtrip(d->r));
                    }
                },
                [&](const assoc::Prop1FromD& m) {
                    validate(m.w);
                    if (!f.translation_invariant || !f.odd) {
                        reject("difference constructor needs a translation invariant odd standardization, got " +
                               fname);
                    }
                    if (!f.r_normal(d->r)) {
                        reject("difference constructor needs an r-normal standardization with r = " +
                               format_roundtrip(d->r) + ", got " + fname);
                    }
                },
                [&](const assoc::Thm1FromS& m) {
                    validate(m.similarity.u);
                    // Sign permutation; weak similarity of reflections holds for any
                    // strictly decreasing U once F is odd.
                    verified_ = f.odd;
                },
                [&](const assoc::Thm2FromS& m) {
                    validate(m.similarity.u);
                    // Non-similarity of reflections: D(x,-x) = 2 and U(2) = 0.
                    const auto* omw = std::get_if<xform::OneMinusW>(&m.similarity.u);
                    verified_ = f.odd && f.r_normal(d->r) && omw != nullptr && omw->h == 2.0;
                },
                [&](const assoc::Cor1FromS& m) {
                    validate(m.similarity.u);
                    // Complement of reflections: 1 - D^2/4 on 2-normal forms (parallelogram law).
                    const auto* omw = std::get_if<xform::OneMinusW>(&m.similarity.u);
                    verified_ = f.odd && d->r == 2.0 && f.r_normal(2.0) && omw != nullptr &&
                                omw->h == 2.0 && omw->w.p == 2.0;
                },
                [](const auto&) {},
            },
            spec_);
        return;
    }

    std::visit(overloaded{
                   [&](const assoc::Pearson&) {
                       scale_invariant_ = true;
                       min_length_ = 2;
                   },
                   [&](const assoc::CosineStandardized& m) {
                       validate(m.standardization);
                       const auto f = flags(m.standardization);
                       verified_ = f.odd;
                       scale_invariant_ = f.scale_invariant || f.scale_proportional;
                       min_length_ = shapeassoc::min_length(m.standardization);
                   },
                   [&](const assoc::GmdrCorrelation& m) {
                       const CentralEstimateSpec c = est::GeneralizedMidrange{m.k, m.m};
                       validate(c);
                       verified_ = !m.printed_denominator;
                       scale_invariant_ = !m.printed_denominator;
                       min_length_ = shapeassoc::min_length(c);
                   },
                   [](const auto&) {},
               },
               spec_);
}

Measure::Prepared Measure::prepare(std::span<const double> x) const {
    require_non_constant(x);
    Prepared p;
    if (const auto* d = dissimilarity_of(spec_)) {
        p.form = standardize(d->standardization, x);
        p.reflected_form = standardize(d->standardization, negated(x));
        return p;
    }
    std::visit(overloaded{
                   [&](const assoc::Pearson&) {
                       p.form = deviations(est::ArithmeticMean{}, x, p.center);
                       p.norm = std::sqrt(dot(p.form, p.form));
                   },
                   [&](const assoc::CosineStandardized& m) {
                       p.form = standardize(m.standardization, x);
                       p.norm = std::sqrt(dot(p.form, p.form));
                   },
                   [&](const assoc::GmdrCorrelation& m) {
                       p.form = deviations(est::GeneralizedMidrange{m.k, m.m}, x, p.center);
                       p.norm = std::sqrt(dot(p.form, p.form));
                       if (m.printed_denominator) p.values.assign(x.begin(), x.end());
                   },
                   [](const auto&) {},
               },
               spec_);
    return p;
}

double Measure::evaluate(const Prepared& x, const Prepared& y) const {
    require_same_length(x.form, y.form);
    return std::visit(
        overloaded{
            [&](const assoc::Thm1FromD& m) {
                const double r = m.dissimilarity.r;
                const double direct = minkowski(x.form, y.form, r);
                const double reflected = minkowski(x.form, y.reflected_form, r);
                if (is_tie(direct, reflected)) return 0.0;
                return direct < reflected ? similarity_from_dissimilarity(m.u, direct)
                                          : -similarity_from_dissimilarity(m.u, reflected);
            },
            [&](const assoc::Prop1FromD& m) {
                const double r = m.dissimilarity.r;
                return apply(m.w, minkowski(x.form, y.reflected_form, r)) -
                       apply(m.w, minkowski(x.form, y.form, r));
            },
            [&](const assoc::Thm1FromS& m) {
                const double r = m.similarity.dissimilarity.r;
                const double s_direct = similarity_from_dissimilarity(m.similarity.u, minkowski(x.form, y.form, r));
                const double s_reflected =
                    similarity_from_dissimilarity(m.similarity.u, minkowski(x.form, y.reflected_form, r));
                // Larger similarity wins, so compare the negated values as "distances".
                return branch(s_direct, s_reflected, -s_direct, -s_reflected);
            },
            [&](const assoc::Thm2FromS& m) {
                const double r = m.similarity.dissimilarity.r;
                return similarity_from_dissimilarity(m.similarity.u, minkowski(x.form, y.form, r)) -
                       similarity_from_dissimilarity(m.similarity.u, minkowski(x.form, y.reflected_form, r));
            },
            [&](const assoc::Cor1FromS& m) {
                const double r = m.similarity.dissimilarity.r;
                return 2.0 * similarity_from_dissimilarity(m.similarity.u, minkowski(x.form, y.form, r)) - 1.0;
            },
            [&](const assoc::Pearson&) { return dot(x.form, y.form) / (x.norm * y.norm); },
            [&](const assoc::CosineStandardized&) { return dot(x.form, y.form) / (x.norm * y.norm); },
            [&](const assoc::GmdrCorrelation& m) {
                if (!m.printed_denominator) return dot(x.form, y.form) / (x.norm * y.norm);
                double yy = 0.0;
                for (double v : y.values) yy += (v - x.center) * (v - x.center);
                return dot(x.form, y.form) / std::sqrt(x.norm * x.norm * yy);
            },
        },
        spec_);
}

double Measure::operator()(std::span<const double> x, std::span<const double> y) const {
    require_same_length(x, y);
    return evaluate(prepare(x), prepare(y));
}

std::string Measure::name() const {
    return std::visit(
        overloaded{
            [](const assoc::Thm1FromD& m) {
                return "thm1_from_d[" + describe(m.dissimilarity) + ", U=" + describe(m.u) + "]";
            },
            [](const assoc::Prop1FromD& m) {
                return "prop1_from_d[" + describe(m.dissimilarity) + ", W=" + describe(m.w) + "]";
            },
            [](const assoc::Thm1FromS& m) {
                return "thm1_from_s[" + describe(m.similarity.dissimilarity) + ", U=" + describe(m.similarity.u) + "]";
            },
            [](const assoc::Thm2FromS& m) {
                return "thm2_from_s[" + describe(m.similarity.dissimilarity) + ", U=" + describe(m.similarity.u) + "]";
            },
            [](const assoc::Cor1FromS& m) {
                return "cor1_from_s[" + describe(m.similarity.dissimilarity) + ", U=" + describe(m.similarity.u) + "]";
            },
            [](const assoc::Pearson&) -> std::string { return "pearson"; },
            [](const assoc::CosineStandardized& m) { return "cosine[" + describe(m.standardization) + "]"; },
            [](const assoc::GmdrCorrelation& m) {
                return std::string(m.printed_denominator ? "gmdr_correlation_printed[" : "gmdr_correlation[") +
                       std::to_string(m.k) + "," + std::to_string(m.m) + "]";
            },
        },
        spec_);
}

double associate(const Measure& measure, const TimeSeries& x, const TimeSeries& y) {
    return measure(x.values(), y.values());
}

double associate(const MeasureSpec& spec, const TimeSeries& x, const TimeSeries& y) {
    return associate(Measure(spec), x, y);
}

double abs_similarity(const Measure& measure, const TimeSeries& x, const TimeSeries& y) {
    return std::abs(associate(measure, x, y));
}

double abs_similarity(const MeasureSpec& spec, const TimeSeries& x, const TimeSeries& y) {
    return abs_similarity(Measure(spec), x, y);
}

namespace {

[[noreturn]] void rethrow_for_pair(const std::string& a, const std::string& b) {
    const std::string where = "pair (" + a + ", " + b + "): ";
    try {
        throw;
    } catch (const ConstantSeriesError& e) {
        throw ConstantSeriesError(where + e.what());
    } catch (const SpecError& e) {
        throw SpecError(where + e.what());
    } catch (const DomainError& e) {
        throw DomainError(where + e.what());
    } catch (const ShapeError& e) {
        throw ShapeError(where + e.what());
    }
}

}  // namespace

LabeledMatrix association_matrix(const Measure& measure, const SeriesSet& set) {
    const std::size_t n = set.size();
    std::vector<Measure::Prepared> prepared;
    prepared.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        try {
            prepared.push_back(measure.prepare(set[i].values()));
        } catch (const Error&) {
            rethrow_for_pair(set[i].id(), set[i == 0 && n > 1 ? 1 : 0].id());
        }
    }
    LabeledMatrix out(set.ids());
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = 0.0;
            try {
                v = measure.evaluate(prepared[i], prepared[j]);
            } catch (const Error&) {
                rethrow_for_pair(set[i].id(), set[j].id());
            }
            out(i, j) = v;
            out(j, i) = v;
        }
    }
    return out;
}

std::string describe(const DissimilaritySpec& spec) {
    return "r=" + format_roundtrip(spec.r) + ", F=" + describe(spec.standardization);
}

std::string describe(const UTransform& u) {
    return std::visit(overloaded{
                          [](const xform::RationalDecay& t) { return format_roundtrip(t.k) + "/(D+" + format_roundtrip(t.k) + ")"; },
                          [](const xform::ExpDecay&) -> std::string { return "exp(-D)"; },
                          [](const xform::OneMinusW& t) {
                              return "1-" + describe(t.w) + " on [0," + format_roundtrip(t.h) + "]";
                          },
                      },
                      u);
}

std::string describe(const VTransform& v) {
    return std::visit(overloaded{
                          [](const xform::LinearComplement& t) { return format_roundtrip(t.k) + "(1-S)"; },
                          [](const xform::OneMinus&) -> std::string { return "1-S"; },
                      },
                      v);
}

std::string describe(const WTransform& w) { return "(D/2)^" + format_roundtrip(w.p); }

}  // namespace shapeassoc
