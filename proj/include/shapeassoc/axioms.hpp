#pragma once

#include "shapeassoc/measures.hpp"
#include "shapeassoc/random.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace shapeassoc {

enum class PropertyId {
    Symmetry,
    DissimSelfZero,
    SimReflexivity,
    AssocReflexivity,
    InverseReflexivity,
    InverseRelationship,
    TranslationInvariance,
    ScaleInvariance,
    AffineSignRule,
    SignPermutation,
    SignCancellation,
    ComplementOfReflections,
    ReflectionInvariance,
    SimilarityOfReflections,
    WeakSimilarityOfReflections,
    NonSimilarityOfReflections,
    ConstantSeriesSimilarity,
    RangeBounds,
};

inline constexpr std::array kAllProperties = {
    PropertyId::Symmetry,
    PropertyId::DissimSelfZero,
    PropertyId::SimReflexivity,
    PropertyId::AssocReflexivity,
    PropertyId::InverseReflexivity,
    PropertyId::InverseRelationship,
    PropertyId::TranslationInvariance,
    PropertyId::ScaleInvariance,
    PropertyId::AffineSignRule,
    PropertyId::SignPermutation,
    PropertyId::SignCancellation,
    PropertyId::ComplementOfReflections,
    PropertyId::ReflectionInvariance,
    PropertyId::SimilarityOfReflections,
    PropertyId::WeakSimilarityOfReflections,
    PropertyId::NonSimilarityOfReflections,
    PropertyId::ConstantSeriesSimilarity,
    PropertyId::RangeBounds,
};

[[nodiscard]] std::string_view to_string(PropertyId id) noexcept;
[[nodiscard]] std::optional<PropertyId> property_from_string(std::string_view name) noexcept;

/// Symmetry, reflexivity, inverse reflexivity, inverse relationship,
/// translation invariance and range: the defining axioms of a shape association measure.
[[nodiscard]] std::vector<PropertyId> shape_association_axioms();

enum class ProximityKind { Dissimilarity, Similarity, Association };

/// S_A(x,y) = |A(x,y)|
struct AbsSimilarity {
    Measure measure;
};

/// D_S(x,y) = V(S(x,y))
struct DissimilarityFromSimilarity {
    std::variant<SimilaritySpec, AbsSimilarity> source;
    VTransform v = xform::OneMinus{};
};

/// Any callable proximity, for negative controls and experimental measures.
struct CustomProximity {
    ProximityKind kind = ProximityKind::Similarity;
    std::string name;
    std::function<double(std::span<const double>, std::span<const double>)> fn;
    /// Whether fn is defined on constant series.
    bool accepts_constants = false;
    std::size_t min_length = 2;
};

/// What the harness can test.
using Subject = std::variant<DissimilaritySpec, DissimilarityFromSimilarity, SimilaritySpec,
                             AbsSimilarity, Measure, CustomProximity>;

[[nodiscard]] ProximityKind kind_of(const Subject& s);
[[nodiscard]] std::string name_of(const Subject& s);
[[nodiscard]] std::size_t min_length(const Subject& s);
[[nodiscard]] bool accepts_constants(const Subject& s);
[[nodiscard]] double evaluate(const Subject& s, std::span<const double> x, std::span<const double> y);

/// Whether the property is defined for the subject's kind (and, for the
/// constant-series property, whether the subject accepts constants).
[[nodiscard]] bool applicable(const Subject& s, PropertyId id);

enum class Status { Pass, Fail, NotApplicable };
[[nodiscard]] std::string_view to_string(Status s) noexcept;

/// A trial input that can be replayed without the generator.
struct Witness {
    std::size_t trial = 0;
    std::uint64_t trial_seed = 0;
    std::vector<double> x;
    std::vector<double> y;
    /// Property-specific parameters: offsets and scale factors used by the trial.
    std::vector<double> params;
    double violation = 0.0;
    std::string note;
};

struct PropertyResult {
    PropertyId id = PropertyId::Symmetry;
    Status status = Status::NotApplicable;
    std::size_t trials = 0;
    double worst_violation = 0.0;
    /// Worst trial; always present on failure.
    std::optional<Witness> witness;
};

struct VerifyOptions {
    std::size_t trials = 200;
    std::size_t n_min = 3;
    std::size_t n_max = 60;
    std::uint64_t seed = 0;
    double tol = 1e-8;
};

struct PropertyReport {
    std::string subject;
    ProximityKind kind = ProximityKind::Association;
    bool verified = true;
    VerifyOptions options;
    std::vector<PropertyResult> results;

    /// No applicable property failed.
    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] const PropertyResult* find(PropertyId id) const;
};

/// Property-based check of `subject` on `options.trials` random inputs per property.
/// Deterministic in (subject, props, options).
[[nodiscard]] PropertyReport verify(const Subject& subject, std::span<const PropertyId> props,
                                    const VerifyOptions& options = {});

/// Recomputes the violation of `id` on a recorded witness.
[[nodiscard]] double replay(const Subject& subject, PropertyId id, const Witness& witness, double tol);

/// One line per property: id, status, trials, worst violation, witness.
[[nodiscard]] std::string to_text(const PropertyReport& report);

/// Random series as used by the harness: uniform on (-10,10), with near-constant
/// (spread 1e-6), monotone and sign-alternating series mixed in. Values lie on a
/// 2^-40 grid so that the harness's translations are exact.
[[nodiscard]] std::vector<double> random_series(Rng& rng, std::size_t n);

/// One curated (subject, property, expected status) case.
struct SuiteCase {
    std::string label;
    Subject subject;
    PropertyId property;
    Status expected;
};

/// Cases giving every property at least one passing and one failing subject.
[[nodiscard]] std::vector<SuiteCase> builtin_suite();

struct ImplicationResult {
    std::string name;
    std::size_t tables = 0;
    bool holds = true;
    std::string counterexample;
};

struct ImplicationReport {
    std::vector<ImplicationResult> results;
    [[nodiscard]] bool all_hold() const;
};

/// Spot-checks the implications between similarity properties on random finite
/// similarity tables closed under reflection.
[[nodiscard]] ImplicationReport implication_checks(std::uint64_t seed, std::size_t trials);

}  // namespace shapeassoc
