#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace shapeassoc {

/// Map x -> scale * x + offset applied elementwise.
struct ScalarAffine {
    double scale = 1.0;
    double offset = 0.0;
};

/// A labelled sequence of at least two finite reals.
class TimeSeries {
public:
    /// Throws LengthError when fewer than two values, ValueError on NaN/inf.
    TimeSeries(std::string id, std::vector<double> values);
    explicit TimeSeries(std::vector<double> values) : TimeSeries("", std::move(values)) {}

    [[nodiscard]] const std::string& id() const noexcept { return id_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return values_[i]; }

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

private:
    std::string id_;
    std::vector<double> values_;
};

[[nodiscard]] TimeSeries affine(const TimeSeries& x, ScalarAffine t);

/// -x, keeping the id.
[[nodiscard]] TimeSeries reflect(const TimeSeries& x);

[[nodiscard]] TimeSeries constant_series(double q, std::size_t n);

/// Exact comparison: true iff every element equals the first.
[[nodiscard]] bool is_constant(std::span<const double> x) noexcept;
[[nodiscard]] inline bool is_constant(const TimeSeries& x) noexcept { return is_constant(x.values()); }

/// A collection of equal-length series with unique ids.
class SeriesSet {
public:
    /// Validates common length and id uniqueness (ShapeError / ValueError).
    explicit SeriesSet(std::vector<TimeSeries> series);

    [[nodiscard]] std::size_t size() const noexcept { return series_.size(); }
    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] const TimeSeries& operator[](std::size_t i) const noexcept { return series_[i]; }
    [[nodiscard]] const std::vector<TimeSeries>& series() const noexcept { return series_; }
    [[nodiscard]] std::vector<std::string> ids() const;

    [[nodiscard]] auto begin() const noexcept { return series_.begin(); }
    [[nodiscard]] auto end() const noexcept { return series_.end(); }

    /// Index of the series with the given id, if present.
    [[nodiscard]] std::optional<std::size_t> find(const std::string& id) const;
    /// Throws SpecError for unknown ids.
    [[nodiscard]] const TimeSeries& at(const std::string& id) const;

    friend bool operator==(const SeriesSet&, const SeriesSet&) = default;

private:
    std::vector<TimeSeries> series_;
    std::size_t length_ = 0;
};

/// Builds a validated set from raw rows. Missing ids become "s1", "s2", ...
[[nodiscard]] SeriesSet load_set(const std::vector<std::vector<double>>& rows,
                                 const std::optional<std::vector<std::string>>& ids = std::nullopt);

}  // namespace shapeassoc
