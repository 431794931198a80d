#pragma once

#include "shapeassoc/matrix.hpp"
#include "shapeassoc/series.hpp"
#include "shapeassoc/standardize.hpp"

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace shapeassoc {

/// D(x,y) = (sum_i |F(x)_i - F(y)_i|^r)^(1/r)
struct DissimilaritySpec {
    double r = 2.0;
    StandardizationSpec standardization = preset::f3();
    friend bool operator==(const DissimilaritySpec&, const DissimilaritySpec&) = default;
};

namespace xform {

/// U(D) = K / (D + K)
struct RationalDecay {
    double k = 1.0;
    friend bool operator==(const RationalDecay&, const RationalDecay&) = default;
};
/// U(D) = exp(-D)
struct ExpDecay {
    friend bool operator==(const ExpDecay&, const ExpDecay&) = default;
};
/// W(D) = (D / 2)^p
struct PowerHalf {
    double p = 1.0;
    friend bool operator==(const PowerHalf&, const PowerHalf&) = default;
};
/// U(D) = 1 - W(D) on [0, h]; needs W(h) <= 1.
struct OneMinusW {
    PowerHalf w;
    double h = 2.0;
    friend bool operator==(const OneMinusW&, const OneMinusW&) = default;
};
/// V(S) = K (1 - S)
struct LinearComplement {
    double k = 1.0;
    friend bool operator==(const LinearComplement&, const LinearComplement&) = default;
};
/// V(S) = 1 - S
struct OneMinus {
    friend bool operator==(const OneMinus&, const OneMinus&) = default;
};

}  // namespace xform

using UTransform = std::variant<xform::RationalDecay, xform::ExpDecay, xform::OneMinusW>;
using WTransform = xform::PowerHalf;
using VTransform = std::variant<xform::LinearComplement, xform::OneMinus>;

/// S(x,y) = U(D(x,y))
struct SimilaritySpec {
    DissimilaritySpec dissimilarity;
    UTransform u = xform::RationalDecay{};
    friend bool operator==(const SimilaritySpec&, const SimilaritySpec&) = default;
};

namespace assoc {

/// Branch form on a Minkowski dissimilarity: U(D(x,y)) if D(x,y) < D(x,-y),
/// -U(D(x,-y)) if D(x,y) > D(x,-y), 0 on a tie.
struct Thm1FromD {
    DissimilaritySpec dissimilarity;
    UTransform u = xform::RationalDecay{};
    friend bool operator==(const Thm1FromD&, const Thm1FromD&) = default;
};
/// W(D(x,-y)) - W(D(x,y)) over an r-normal odd standardization.
struct Prop1FromD {
    DissimilaritySpec dissimilarity;
    WTransform w = xform::PowerHalf{2.0};
    friend bool operator==(const Prop1FromD&, const Prop1FromD&) = default;
};
/// S(x,y) if S(x,y) > S(x,-y), -S(x,-y) if S(x,y) < S(x,-y), 0 otherwise.
struct Thm1FromS {
    SimilaritySpec similarity;
    friend bool operator==(const Thm1FromS&, const Thm1FromS&) = default;
};
/// S(x,y) - S(x,-y)
struct Thm2FromS {
    SimilaritySpec similarity;
    friend bool operator==(const Thm2FromS&, const Thm2FromS&) = default;
};
/// 2 S(x,y) - 1
struct Cor1FromS {
    SimilaritySpec similarity;
    friend bool operator==(const Cor1FromS&, const Cor1FromS&) = default;
};
/// Sample correlation coefficient.
struct Pearson {
    friend bool operator==(const Pearson&, const Pearson&) = default;
};
/// cos(F(x), F(y))
struct CosineStandardized {
    StandardizationSpec standardization = preset::f3();
    friend bool operator==(const CosineStandardized&, const CosineStandardized&) = default;
};
/// Correlation coefficient with GMDR_k,m in place of the mean. With
/// printed_denominator the y-factor is centered on GMDR(x) instead of GMDR(y);
/// that form is neither symmetric nor translation invariant and only exists as
/// a negative control.
struct GmdrCorrelation {
    std::size_t k = 0;
    std::size_t m = 1;
    bool printed_denominator = false;
    friend bool operator==(const GmdrCorrelation&, const GmdrCorrelation&) = default;
};

}  // namespace assoc

using MeasureSpec =
    std::variant<assoc::Thm1FromD, assoc::Prop1FromD, assoc::Thm1FromS, assoc::Thm2FromS,
                 assoc::Cor1FromS, assoc::Pearson, assoc::CosineStandardized, assoc::GmdrCorrelation>;

/// D(x,y) vs D(x,-y) tie threshold of the branch constructors, relative to max(1, D).
inline constexpr double kBranchTieTolerance = 1e-12;

void validate(const DissimilaritySpec& spec);
void validate(const UTransform& u);
void validate(const VTransform& v);
void validate(const WTransform& w);
void validate(const SimilaritySpec& spec);

[[nodiscard]] double dissimilarity(const DissimilaritySpec& spec, std::span<const double> x,
                                   std::span<const double> y);
[[nodiscard]] double dissimilarity(const DissimilaritySpec& spec, const TimeSeries& x,
                                   const TimeSeries& y);

/// U(d). DomainError for d < 0, or d > h for OneMinusW.
[[nodiscard]] double similarity_from_dissimilarity(const UTransform& u, double d);
/// V(s). DomainError unless 0 <= s <= 1.
[[nodiscard]] double dissimilarity_from_similarity(const VTransform& v, double s);
[[nodiscard]] double apply(const WTransform& w, double d);

[[nodiscard]] double similarity(const SimilaritySpec& spec, std::span<const double> x,
                                std::span<const double> y);
[[nodiscard]] double similarity(const SimilaritySpec& spec, const TimeSeries& x, const TimeSeries& y);

/// An association measure recipe checked against the preconditions of its constructor.
class Measure {
public:
    /// Per-series precomputation reused across pairs.
    struct Prepared {
        std::vector<double> values;
        std::vector<double> form;            // F(x), or deviations for the correlation forms
        std::vector<double> reflected_form;  // F(-x), only for the dissimilarity forms
        double norm = 0.0;
        double center = 0.0;
    };

    /// Throws SpecError if the parameters are invalid, or if a Minkowski-based
    /// constructor is given a standardization lacking the required properties.
    /// Similarity-based recipes whose preconditions fail are still accepted but
    /// reported as !verified().
    explicit Measure(MeasureSpec spec);

    /// Skips the standardization property requirements; parameter sanity is still checked.
    [[nodiscard]] static Measure unchecked(MeasureSpec spec);

    [[nodiscard]] const MeasureSpec& spec() const noexcept { return spec_; }
    /// True when the constructor's preconditions hold, so the result is a shape association measure.
    [[nodiscard]] bool verified() const noexcept { return verified_; }
    [[nodiscard]] bool scale_invariant() const noexcept { return scale_invariant_; }
    [[nodiscard]] std::size_t min_length() const noexcept { return min_length_; }
    [[nodiscard]] std::string name() const;

    /// Throws ConstantSeriesError for constant x.
    [[nodiscard]] Prepared prepare(std::span<const double> x) const;
    [[nodiscard]] double evaluate(const Prepared& x, const Prepared& y) const;

    [[nodiscard]] double operator()(std::span<const double> x, std::span<const double> y) const;

    friend bool operator==(const Measure&, const Measure&) = default;

private:
    Measure(MeasureSpec spec, bool strict);

    MeasureSpec spec_;
    bool verified_ = true;
    bool scale_invariant_ = false;
    std::size_t min_length_ = 2;
};

[[nodiscard]] double associate(const Measure& measure, const TimeSeries& x, const TimeSeries& y);
[[nodiscard]] double associate(const MeasureSpec& spec, const TimeSeries& x, const TimeSeries& y);

/// |A(x,y)|
[[nodiscard]] double abs_similarity(const Measure& measure, const TimeSeries& x, const TimeSeries& y);
[[nodiscard]] double abs_similarity(const MeasureSpec& spec, const TimeSeries& x, const TimeSeries& y);

/// M[i][j] = A(s_i, s_j), symmetric with unit diagonal. Errors name the offending pair.
[[nodiscard]] LabeledMatrix association_matrix(const Measure& measure, const SeriesSet& set);

[[nodiscard]] std::string describe(const DissimilaritySpec& spec);
[[nodiscard]] std::string describe(const UTransform& u);
[[nodiscard]] std::string describe(const VTransform& v);
[[nodiscard]] std::string describe(const WTransform& w);

}  // namespace shapeassoc
