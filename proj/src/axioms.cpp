#include "shapeassoc/axioms.hpp"

#include "shapeassoc/error.hpp"
#include "shapeassoc/numfmt.hpp"
#include "overloaded.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace shapeassoc {

using detail::overloaded;

namespace {

constexpr std::array<std::string_view, kAllProperties.size()> kPropertyNames = {
    "Symmetry",
    "DissimSelfZero",
    "SimReflexivity",
    "AssocReflexivity",
    "InverseReflexivity",
    "InverseRelationship",
    "TranslationInvariance",
    "ScaleInvariance",
    "AffineSignRule",
    "SignPermutation",
    "SignCancellation",
    "ComplementOfReflections",
    "ReflectionInvariance",
    "SimilarityOfReflections",
    "WeakSimilarityOfReflections",
    "NonSimilarityOfReflections",
    "ConstantSeriesSimilarity",
    "RangeBounds",
};

constexpr double kGrid = 0x1.0p-40;
constexpr std::array kScaleFactors = {1e-3, 0.5, 2.0, 1e3};
constexpr std::array kAffineFactors = {-3.0, -1.0, 0.5, 2.0};

double snap(double v) { return std::round(v / kGrid) * kGrid; }

std::vector<double> transformed(std::span<const double> x, double p, double q) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = p * x[i] + q;
    return out;
}

std::vector<double> neg(std::span<const double> x) { return transformed(x, -1.0, 0.0); }

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

bool is_center_only(const DissimilaritySpec& d) {
    return std::holds_alternative<std_form::Center>(d.standardization);
}

// Parameters a property needs beyond the two series.
std::vector<double> draw_params(PropertyId id, Rng& rng) {
    switch (id) {
        case PropertyId::TranslationInvariance:
            return {snap(rng.uniform(-100.0, 100.0))};
        case PropertyId::ScaleInvariance:
            return {kScaleFactors[rng.integer(0, kScaleFactors.size() - 1)]};
        case PropertyId::AffineSignRule: {
            const double p1 = kAffineFactors[rng.integer(0, kAffineFactors.size() - 1)];
            const double q1 = snap(rng.uniform(-100.0, 100.0));
            const double p2 = kAffineFactors[rng.integer(0, kAffineFactors.size() - 1)];
            const double q2 = snap(rng.uniform(-100.0, 100.0));
            return {p1, q1, p2, q2};
        }
        case PropertyId::ConstantSeriesSimilarity:
            return {snap(rng.uniform(-10.0, 10.0)), snap(rng.uniform(-10.0, 10.0))};
        default:
            return {};
    }
}

double outside(double v, double lo, double hi) {
    if (v < lo) return lo - v;
    if (v > hi) return v - hi;
    return 0.0;
}

double violation_of(const Subject& s, PropertyId id, std::span<const double> x, std::span<const double> y,
                    const std::vector<double>& params, double tol) {
    auto P = [&](std::span<const double> a, std::span<const double> b) { return evaluate(s, a, b); };
    const auto nx = neg(x);
    const auto ny = neg(y);
    switch (id) {
        case PropertyId::Symmetry:
            return std::abs(P(x, y) - P(y, x));
        case PropertyId::DissimSelfZero:
            return std::max(std::abs(P(x, x)), std::max(0.0, -P(x, y)));
        case PropertyId::SimReflexivity:
        case PropertyId::AssocReflexivity:
            return std::abs(P(x, x) - 1.0);
        case PropertyId::InverseReflexivity:
            return std::abs(P(nx, x) + 1.0);
        case PropertyId::InverseRelationship:
            return std::abs(P(nx, y) + P(x, y));
        case PropertyId::TranslationInvariance:
            return std::abs(P(transformed(x, 1.0, params.at(0)), y) - P(x, y));
        case PropertyId::ScaleInvariance:
            return std::abs(P(transformed(x, params.at(0), 0.0), y) - P(x, y));
        case PropertyId::AffineSignRule: {
            const double lhs = P(transformed(x, params.at(0), params.at(1)), transformed(y, params.at(2), params.at(3)));
            return std::abs(lhs - sign(params[0]) * sign(params[2]) * P(x, y));
        }
        case PropertyId::SignPermutation:
            return std::abs(P(nx, y) - P(x, ny));
        case PropertyId::SignCancellation:
            return std::abs(P(nx, ny) - P(x, y));
        case PropertyId::ComplementOfReflections:
            return std::abs(P(nx, y) + P(x, y) - 1.0);
        case PropertyId::ReflectionInvariance:
            return std::abs(P(nx, y) - P(x, y));
        case PropertyId::SimilarityOfReflections:
            return std::abs(P(nx, x) - 1.0);
        case PropertyId::WeakSimilarityOfReflections: {
            // Strict inequality: fails (violation > tol) exactly when the gap to 1 is below tol.
            const double gap = 1.0 - P(nx, x);
            return std::max(0.0, 2.0 * tol - gap);
        }
        case PropertyId::NonSimilarityOfReflections:
            return std::abs(P(nx, x));
        case PropertyId::ConstantSeriesSimilarity: {
            const std::vector<double> qn(x.size(), params.at(0));
            const std::vector<double> rn(x.size(), params.at(1));
            return std::max(std::abs(P(qn, rn) - 1.0), std::abs(P(x, qn) - P(x, rn)));
        }
        case PropertyId::RangeBounds: {
            const double v = P(x, y);
            switch (kind_of(s)) {
                case ProximityKind::Dissimilarity:
                    return std::max(0.0, -v);
                case ProximityKind::Similarity:
                    return outside(v, 0.0, 1.0);
                case ProximityKind::Association:
                    return outside(v, -1.0, 1.0);
            }
        }
    }
    return 0.0;
}

double safe_violation(const Subject& s, PropertyId id, std::span<const double> x, std::span<const double> y,
                      const std::vector<double>& params, double tol, std::string& note) {
    try {
        const double v = violation_of(s, id, x, y, params, tol);
        if (std::isnan(v)) {
            note = "NaN result";
            return std::numeric_limits<double>::infinity();
        }
        return v;
    } catch (const Error& e) {
        note = e.what();
        return std::numeric_limits<double>::infinity();
    }
}

std::string_view kind_name(ProximityKind k) {
    switch (k) {
        case ProximityKind::Dissimilarity:
            return "dissimilarity";
        case ProximityKind::Similarity:
            return "similarity";
        case ProximityKind::Association:
            return "association";
    }
    return "?";
}

}  // namespace

std::string_view to_string(PropertyId id) noexcept { return kPropertyNames[static_cast<std::size_t>(id)]; }

std::optional<PropertyId> property_from_string(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kPropertyNames.size(); ++i) {
        if (kPropertyNames[i] == name) return kAllProperties[i];
    }
    return std::nullopt;
}

std::vector<PropertyId> shape_association_axioms() {
    return {PropertyId::Symmetry,           PropertyId::AssocReflexivity,      PropertyId::InverseReflexivity,
            PropertyId::InverseRelationship, PropertyId::TranslationInvariance, PropertyId::RangeBounds};
}

std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::Pass:
            return "pass";
        case Status::Fail:
            return "fail";
        case Status::NotApplicable:
            return "not-applicable";
    }
    return "?";
}

ProximityKind kind_of(const Subject& s) {
    return std::visit(overloaded{
                          [](const DissimilaritySpec&) { return ProximityKind::Dissimilarity; },
                          [](const DissimilarityFromSimilarity&) { return ProximityKind::Dissimilarity; },
                          [](const SimilaritySpec&) { return ProximityKind::Similarity; },
                          [](const AbsSimilarity&) { return ProximityKind::Similarity; },
                          [](const Measure&) { return ProximityKind::Association; },
                          [](const CustomProximity& c) { return c.kind; },
                      },
                      s);
}

std::string name_of(const Subject& s) {
    return std::visit(
        overloaded{
            [](const DissimilaritySpec& d) { return "minkowski[" + describe(d) + "]"; },
            [](const DissimilarityFromSimilarity& d) {
                const std::string src = std::visit(
                    overloaded{
                        [](const SimilaritySpec& sim) {
                            return "similarity[" + describe(sim.dissimilarity) + ", U=" + describe(sim.u) + "]";
                        },
                        [](const AbsSimilarity& a) { return "abs(" + a.measure.name() + ")"; },
                    },
                    d.source);
                return "V[" + describe(d.v) + "](" + src + ")";
            },
            [](const SimilaritySpec& sim) {
                return "similarity[" + describe(sim.dissimilarity) + ", U=" + describe(sim.u) + "]";
            },
            [](const AbsSimilarity& a) { return "abs(" + a.measure.name() + ")"; },
            [](const Measure& m) { return m.name(); },
            [](const CustomProximity& c) { return c.name; },
        },
        s);
}

std::size_t min_length(const Subject& s) {
    return std::visit(overloaded{
                          [](const DissimilaritySpec& d) { return min_length(d.standardization); },
                          [](const DissimilarityFromSimilarity& d) {
                              return std::visit(overloaded{
                                                    [](const SimilaritySpec& sim) {
                                                        return min_length(sim.dissimilarity.standardization);
                                                    },
                                                    [](const AbsSimilarity& a) { return a.measure.min_length(); },
                                                },
                                                d.source);
                          },
                          [](const SimilaritySpec& sim) { return min_length(sim.dissimilarity.standardization); },
                          [](const AbsSimilarity& a) { return a.measure.min_length(); },
                          [](const Measure& m) { return m.min_length(); },
                          [](const CustomProximity& c) { return c.min_length; },
                      },
                      s);
}

bool accepts_constants(const Subject& s) {
    return std::visit(overloaded{
                          [](const DissimilaritySpec& d) { return is_center_only(d); },
                          [](const DissimilarityFromSimilarity& d) {
                              const auto* sim = std::get_if<SimilaritySpec>(&d.source);
                              return sim != nullptr && is_center_only(sim->dissimilarity);
                          },
                          [](const SimilaritySpec& sim) { return is_center_only(sim.dissimilarity); },
                          [](const AbsSimilarity&) { return false; },
                          [](const Measure&) { return false; },
                          [](const CustomProximity& c) { return c.accepts_constants; },
                      },
                      s);
}

double evaluate(const Subject& s, std::span<const double> x, std::span<const double> y) {
    return std::visit(overloaded{
                          [&](const DissimilaritySpec& d) { return dissimilarity(d, x, y); },
                          [&](const DissimilarityFromSimilarity& d) {
                              double sim = std::visit(overloaded{
                                                          [&](const SimilaritySpec& spec) { return similarity(spec, x, y); },
                                                          [&](const AbsSimilarity& a) { return std::abs(a.measure(x, y)); },
                                                      },
                                                      d.source);
                              // |A| may exceed 1 by rounding.
                              if (sim > 1.0 && sim <= 1.0 + 1e-12) sim = 1.0;
                              return dissimilarity_from_similarity(d.v, sim);
                          },
                          [&](const SimilaritySpec& spec) { return similarity(spec, x, y); },
                          [&](const AbsSimilarity& a) { return std::abs(a.measure(x, y)); },
                          [&](const Measure& m) { return m(x, y); },
                          [&](const CustomProximity& c) { return c.fn(x, y); },
                      },
                      s);
}

bool applicable(const Subject& s, PropertyId id) {
    const ProximityKind k = kind_of(s);
    switch (id) {
        case PropertyId::Symmetry:
        case PropertyId::TranslationInvariance:
        case PropertyId::ScaleInvariance:
        case PropertyId::SignPermutation:
        case PropertyId::SignCancellation:
        case PropertyId::RangeBounds:
            return true;
        case PropertyId::DissimSelfZero:
            return k == ProximityKind::Dissimilarity;
        case PropertyId::SimReflexivity:
        case PropertyId::ComplementOfReflections:
        case PropertyId::ReflectionInvariance:
        case PropertyId::SimilarityOfReflections:
        case PropertyId::WeakSimilarityOfReflections:
        case PropertyId::NonSimilarityOfReflections:
            return k == ProximityKind::Similarity;
        case PropertyId::ConstantSeriesSimilarity:
            return k == ProximityKind::Similarity && accepts_constants(s);
        case PropertyId::AssocReflexivity:
        case PropertyId::InverseReflexivity:
        case PropertyId::InverseRelationship:
        case PropertyId::AffineSignRule:
            return k == ProximityKind::Association;
    }
    return false;
}

std::vector<double> random_series(Rng& rng, std::size_t n) {
    std::vector<double> x(n);
    for (;;) {
        const double kind = rng.uniform();
        if (kind < 0.10) {
            const double level = rng.uniform(-10.0, 10.0);
            for (double& v : x) v = level + 1e-6 * rng.uniform(-0.5, 0.5);
        } else if (kind < 0.20) {
            for (double& v : x) v = rng.uniform(-10.0, 10.0);
            std::sort(x.begin(), x.end());
            if (rng.bernoulli(0.5)) std::reverse(x.begin(), x.end());
        } else if (kind < 0.25) {
            const double level = rng.uniform(-5.0, 5.0);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = level + (i % 2 == 0 ? 1.0 : -1.0) * rng.uniform(0.5, 5.0);
            }
        } else {
            for (double& v : x) v = rng.uniform(-10.0, 10.0);
        }
        for (double& v : x) v = snap(v);
        if (!is_constant(x)) return x;
    }
}

bool PropertyReport::all_passed() const {
    return std::ranges::none_of(results, [](const PropertyResult& r) { return r.status == Status::Fail; });
}

const PropertyResult* PropertyReport::find(PropertyId id) const {
    for (const auto& r : results) {
        if (r.id == id) return &r;
    }
    return nullptr;
}

PropertyReport verify(const Subject& subject, std::span<const PropertyId> props, const VerifyOptions& options) {
    if (options.trials < 1) throw SpecError("verify: trials must be >= 1");
    if (!(options.tol > 0.0)) throw SpecError("verify: tol must be positive");
    const std::size_t n_lo = std::max(options.n_min, min_length(subject));
    if (n_lo > options.n_max) {
        throw SpecError("verify: length range [" + std::to_string(options.n_min) + ", " +
                        std::to_string(options.n_max) + "] is too short for " + name_of(subject));
    }

    PropertyReport report;
    report.subject = name_of(subject);
    report.kind = kind_of(subject);
    if (const auto* m = std::get_if<Measure>(&subject)) report.verified = m->verified();
    report.options = options;

    for (const PropertyId id : props) {
        PropertyResult result;
        result.id = id;
        if (!applicable(subject, id)) {
            report.results.push_back(result);
            continue;
        }
        result.status = Status::Pass;
        result.trials = options.trials;
        for (std::size_t t = 0; t < options.trials; ++t) {
            const std::uint64_t trial_seed = derive_seed(options.seed, static_cast<std::uint64_t>(id), t);
            Rng rng(trial_seed);
            const std::size_t n = rng.integer(n_lo, options.n_max);
            auto x = random_series(rng, n);
            auto y = random_series(rng, n);
            auto params = draw_params(id, rng);
            std::string note;
            const double v = safe_violation(subject, id, x, y, params, options.tol, note);
            if (t == 0 || v > result.worst_violation) {
                result.worst_violation = v;
                if (v > options.tol) {
                    result.witness = Witness{t, trial_seed, std::move(x), std::move(y), std::move(params), v, note};
                }
            }
        }
        if (result.worst_violation > options.tol) {
            result.status = Status::Fail;
        } else {
            result.witness.reset();
        }
        report.results.push_back(std::move(result));
    }
    return report;
}

double replay(const Subject& subject, PropertyId id, const Witness& witness, double tol) {
    std::string note;
    return safe_violation(subject, id, witness.x, witness.y, witness.params, tol, note);
}

std::string to_text(const PropertyReport& report) {
    std::ostringstream out;
    const auto& o = report.options;
    out << "# " << report.subject << " (" << kind_name(report.kind) << (report.verified ? "" : ", unverified")
        << ") seed=" << o.seed << " trials=" << o.trials << " n=[" << o.n_min << "," << o.n_max
        << "] tol=" << format_general(o.tol, 3) << "\n";
    for (const auto& r : report.results) {
        out << to_string(r.id) << ' ' << to_string(r.status) << " trials=" << r.trials
            << " worst=" << format_general(r.worst_violation, 6) << " witness=";
        if (r.witness) {
            out << "trial:" << r.witness->trial << ",n:" << r.witness->x.size() << ",seed:" << r.witness->trial_seed;
        } else {
            out << '-';
        }
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------- built-in suite

std::vector<SuiteCase> builtin_suite() {
    const Measure pearson{assoc::Pearson{}};
    const Measure thm1_mdr{assoc::Thm1FromD{{2.0, normalized(est::Midrange{})}, xform::RationalDecay{1.0}}};
    const Measure prop1_f3{assoc::Prop1FromD{{2.0, preset::f3()}, xform::PowerHalf{2.0}}};
    const Measure thm1_min =
        Measure::unchecked(assoc::Thm1FromD{{2.0, preset::f2()}, xform::RationalDecay{1.0}});
    const Measure thm1_f1{assoc::Thm1FromD{{2.0, preset::f1()}, xform::RationalDecay{1.0}}};
    const Measure prop1_f1 = Measure::unchecked(assoc::Prop1FromD{{2.0, preset::f1()}, xform::PowerHalf{2.0}});
    const Measure thm2_rd{assoc::Thm2FromS{SimilaritySpec{{2.0, preset::f3()}, xform::RationalDecay{1.0}}}};
    const Measure gmdr_printed{assoc::GmdrCorrelation{0, 2, true}};

    const SimilaritySpec sim_f3_rd{{2.0, preset::f3()}, xform::RationalDecay{1.0}};
    const SimilaritySpec sim_f3_omw{{2.0, preset::f3()}, xform::OneMinusW{xform::PowerHalf{2.0}, 2.0}};
    const SimilaritySpec sim_min_rd{{2.0, preset::f2()}, xform::RationalDecay{1.0}};
    const SimilaritySpec sim_f1_rd{{2.0, preset::f1()}, xform::RationalDecay{1.0}};
    const AbsSimilarity abs_pearson{pearson};
    const AbsSimilarity abs_thm2{thm2_rd};
    const DissimilaritySpec d_f3{2.0, preset::f3()};
    const DissimilarityFromSimilarity d_from_abs_thm2{abs_thm2, xform::OneMinus{}};
    const CustomProximity raw_euclid{
        ProximityKind::Similarity, "raw_euclidean_similarity",
        [](std::span<const double> x, std::span<const double> y) {
            double s = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
            return 1.0 / (1.0 + std::sqrt(s));
        },
        true, 2};

    using P = PropertyId;
    using S = Status;
    return {
        {"pearson", pearson, P::Symmetry, S::Pass},
        {"gmdr_printed", gmdr_printed, P::Symmetry, S::Fail},
        {"d_f3", d_f3, P::DissimSelfZero, S::Pass},
        {"d_from_abs_thm2", d_from_abs_thm2, P::DissimSelfZero, S::Fail},
        {"sim_f3_rd", sim_f3_rd, P::SimReflexivity, S::Pass},
        {"abs_thm2", abs_thm2, P::SimReflexivity, S::Fail},
        {"pearson", pearson, P::AssocReflexivity, S::Pass},
        {"thm2_rd", thm2_rd, P::AssocReflexivity, S::Fail},
        {"thm1_mdr", thm1_mdr, P::InverseReflexivity, S::Pass},
        {"thm2_rd", thm2_rd, P::InverseReflexivity, S::Fail},
        {"thm1_mdr", thm1_mdr, P::InverseRelationship, S::Pass},
        {"thm1_min", thm1_min, P::InverseRelationship, S::Fail},
        {"pearson", pearson, P::TranslationInvariance, S::Pass},
        {"gmdr_printed", gmdr_printed, P::TranslationInvariance, S::Fail},
        {"raw_euclid", raw_euclid, P::TranslationInvariance, S::Fail},
        {"thm1_mdr", thm1_mdr, P::ScaleInvariance, S::Pass},
        {"thm1_f1", thm1_f1, P::ScaleInvariance, S::Fail},
        {"prop1_f3", prop1_f3, P::AffineSignRule, S::Pass},
        {"thm1_f1", thm1_f1, P::AffineSignRule, S::Fail},
        {"sim_f3_rd", sim_f3_rd, P::SignPermutation, S::Pass},
        {"sim_min_rd", sim_min_rd, P::SignPermutation, S::Fail},
        {"sim_f3_rd", sim_f3_rd, P::SignCancellation, S::Pass},
        {"sim_min_rd", sim_min_rd, P::SignCancellation, S::Fail},
        {"sim_f3_omw", sim_f3_omw, P::ComplementOfReflections, S::Pass},
        {"sim_f3_rd", sim_f3_rd, P::ComplementOfReflections, S::Fail},
        {"abs_pearson", abs_pearson, P::ReflectionInvariance, S::Pass},
        {"sim_f3_rd", sim_f3_rd, P::ReflectionInvariance, S::Fail},
        {"abs_pearson", abs_pearson, P::SimilarityOfReflections, S::Pass},
        {"sim_f3_rd", sim_f3_rd, P::SimilarityOfReflections, S::Fail},
        {"sim_f3_rd", sim_f3_rd, P::WeakSimilarityOfReflections, S::Pass},
        {"abs_pearson", abs_pearson, P::WeakSimilarityOfReflections, S::Fail},
        {"sim_f3_omw", sim_f3_omw, P::NonSimilarityOfReflections, S::Pass},
        {"sim_f3_rd", sim_f3_rd, P::NonSimilarityOfReflections, S::Fail},
        {"sim_f1_rd", sim_f1_rd, P::ConstantSeriesSimilarity, S::Pass},
        {"raw_euclid", raw_euclid, P::ConstantSeriesSimilarity, S::Fail},
        {"pearson", pearson, P::RangeBounds, S::Pass},
        {"prop1_f1", prop1_f1, P::RangeBounds, S::Fail},
    };
}

// ---------------------------------------------------------------- implications

namespace {

// Similarity table over base objects x_1..x_N and their reflections; object
// i + N is the reflection of object i.
struct ReflectionTable {
    std::size_t base = 0;
    std::vector<double> s;

    [[nodiscard]] std::size_t size() const { return 2 * base; }
    [[nodiscard]] std::size_t refl(std::size_t a) const { return (a + base) % size(); }
    [[nodiscard]] double operator()(std::size_t a, std::size_t b) const { return s[a * size() + b]; }
    void set(std::size_t a, std::size_t b, double v) {
        s[a * size() + b] = v;
        s[b * size() + a] = v;
    }
};

constexpr double kTableTol = 1e-12;

bool near(double a, double b) { return std::abs(a - b) <= kTableTol; }

template <class Pred>
bool forall_pairs(const ReflectionTable& t, Pred pred) {
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b)
            if (!pred(a, b)) return false;
    return true;
}

template <class Pred>
bool forall_objects(const ReflectionTable& t, Pred pred) {
    for (std::size_t a = 0; a < t.size(); ++a)
        if (!pred(a)) return false;
    return true;
}

bool reflexive(const ReflectionTable& t) {
    return forall_objects(t, [&](std::size_t a) { return near(t(a, a), 1.0); });
}
bool symmetric(const ReflectionTable& t) {
    return forall_pairs(t, [&](std::size_t a, std::size_t b) { return t(a, b) == t(b, a); });
}
bool reflection_invariant(const ReflectionTable& t) {
    return forall_pairs(t, [&](std::size_t a, std::size_t b) { return near(t(t.refl(a), b), t(a, b)); });
}
bool complement_of_reflections(const ReflectionTable& t) {
    return forall_pairs(t, [&](std::size_t a, std::size_t b) { return near(t(t.refl(a), b), 1.0 - t(a, b)); });
}
bool sign_permutation(const ReflectionTable& t) {
    return forall_pairs(t, [&](std::size_t a, std::size_t b) { return near(t(t.refl(a), b), t(a, t.refl(b))); });
}
bool sign_cancellation(const ReflectionTable& t) {
    return forall_pairs(t, [&](std::size_t a, std::size_t b) { return near(t(t.refl(a), t.refl(b)), t(a, b)); });
}
bool similarity_of_reflections(const ReflectionTable& t) {
    return forall_objects(t, [&](std::size_t a) { return near(t(t.refl(a), a), 1.0); });
}
bool weak_similarity_of_reflections(const ReflectionTable& t) {
    return forall_objects(t, [&](std::size_t a) { return t(t.refl(a), a) < 1.0; });
}
bool non_similarity_of_reflections(const ReflectionTable& t) {
    return forall_objects(t, [&](std::size_t a) { return near(t(t.refl(a), a), 0.0); });
}

enum class Family { Random, ReflectionInvariant, Complement, SignPermuting, SignPermutingNonSimilar };

// Base-pair values v(i,j), symmetric, with the given diagonal.
std::vector<double> base_values(Rng& rng, std::size_t n, double diagonal) {
    std::vector<double> v(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i * n + i] = diagonal;
        for (std::size_t j = i + 1; j < n; ++j) v[i * n + j] = v[j * n + i] = rng.uniform();
    }
    return v;
}

ReflectionTable make_table(Family family, Rng& rng) {
    ReflectionTable t;
    t.base = rng.integer(2, 6);
    const std::size_t n = t.base;
    t.s.assign(t.size() * t.size(), 0.0);
    const auto direct = base_values(rng, n, 1.0);
    switch (family) {
        case Family::Random:
            for (std::size_t a = 0; a < t.size(); ++a) {
                t.set(a, a, 1.0);
                for (std::size_t b = a + 1; b < t.size(); ++b) t.set(a, b, rng.uniform());
            }
            break;
        case Family::ReflectionInvariant:
        case Family::Complement:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const double v = direct[i * n + j];
                    const double crossed = family == Family::Complement ? 1.0 - v : v;
                    t.set(i, j, v);
                    t.set(i + n, j + n, v);
                    t.set(i + n, j, crossed);
                    t.set(i, j + n, crossed);
                }
            break;
        case Family::SignPermuting:
        case Family::SignPermutingNonSimilar: {
            const double cross_diag = family == Family::SignPermutingNonSimilar ? 0.0 : 0.5 * rng.uniform();
            const auto cross = base_values(rng, n, cross_diag);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    t.set(i, j, direct[i * n + j]);
                    t.set(i + n, j + n, direct[i * n + j]);
                    t.set(i + n, j, cross[i * n + j]);
                    t.set(i, j + n, cross[i * n + j]);
                }
            break;
        }
    }
    return t;
}

std::string describe_table(const ReflectionTable& t, std::size_t index) {
    return "table #" + std::to_string(index) + " over " + std::to_string(t.base) + " base objects";
}

}  // namespace

bool ImplicationReport::all_hold() const {
    return std::ranges::all_of(results, [](const ImplicationResult& r) { return r.holds; });
}

ImplicationReport implication_checks(std::uint64_t seed, std::size_t trials) {
    constexpr std::array families = {Family::Random, Family::ReflectionInvariant, Family::Complement,
                                     Family::SignPermuting, Family::SignPermutingNonSimilar};
    std::vector<ReflectionTable> tables;
    for (std::size_t f = 0; f < families.size(); ++f) {
        for (std::size_t t = 0; t < trials; ++t) {
            Rng rng(derive_seed(seed, 0x1000 + f, t));
            tables.push_back(make_table(families[f], rng));
        }
    }

    struct Check {
        std::string name;
        std::function<bool(const ReflectionTable&)> premise;
        std::function<bool(const ReflectionTable&)> conclusion;
    };
    const std::vector<Check> checks = {
        {"reflection invariance + reflexivity => similarity of reflections",
         [](const auto& t) { return reflection_invariant(t) && reflexive(t); }, similarity_of_reflections},
        {"complement of reflections + reflexivity => non-similarity of reflections",
         [](const auto& t) { return complement_of_reflections(t) && reflexive(t); }, non_similarity_of_reflections},
        {"reflection invariance and complement of reflections are incompatible", [](const auto& t) { return reflexive(t); },
         [](const auto& t) { return !(reflection_invariant(t) && complement_of_reflections(t)); }},
        {"reflection invariance + symmetry => sign permutation and sign cancellation",
         [](const auto& t) { return reflection_invariant(t) && symmetric(t); },
         [](const auto& t) { return sign_permutation(t) && sign_cancellation(t); }},
        {"complement of reflections + symmetry => sign permutation and sign cancellation",
         [](const auto& t) { return complement_of_reflections(t) && symmetric(t); },
         [](const auto& t) { return sign_permutation(t) && sign_cancellation(t); }},
        {"non-similarity of reflections => weak similarity of reflections", non_similarity_of_reflections,
         weak_similarity_of_reflections},
        {"sign permutation <=> sign cancellation", [](const auto&) { return true; },
         [](const auto& t) { return sign_permutation(t) == sign_cancellation(t); }},
    };

    ImplicationReport report;
    for (const auto& check : checks) {
        ImplicationResult r;
        r.name = check.name;
        for (std::size_t i = 0; i < tables.size(); ++i) {
            if (!check.premise(tables[i])) continue;
            ++r.tables;
            if (r.holds && !check.conclusion(tables[i])) {
                r.holds = false;
                r.counterexample = describe_table(tables[i], i);
            }
        }
        report.results.push_back(std::move(r));
    }
    return report;
}

}  // namespace shapeassoc
