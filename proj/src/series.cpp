#include "shapeassoc/series.hpp"

#include "shapeassoc/error.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace shapeassoc {

TimeSeries::TimeSeries(std::string id, std::vector<double> values)
    : id_(std::move(id)), values_(std::move(values)) {
    if (values_.size() < 2) {
        throw LengthError("series '" + id_ + "' has " + std::to_string(values_.size()) +
                          " values, at least 2 required");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw ValueError("series '" + id_ + "' has a non-finite value at index " +
                             std::to_string(i));
        }
    }
}

TimeSeries affine(const TimeSeries& x, ScalarAffine t) {
    std::vector<double> out(x.size());
    std::ranges::transform(x.values(), out.begin(),
                           [t](double v) { return t.scale * v + t.offset; });
    return TimeSeries(x.id(), std::move(out));
}

TimeSeries reflect(const TimeSeries& x) {
    std::vector<double> out(x.size());
    std::ranges::transform(x.values(), out.begin(), [](double v) { return -v; });
    return TimeSeries(x.id(), std::move(out));
}

TimeSeries constant_series(double q, std::size_t n) {
    if (n < 2) {
        throw LengthError("constant series needs length >= 2, got " + std::to_string(n));
    }
    return TimeSeries(std::vector<double>(n, q));
}

bool is_constant(std::span<const double> x) noexcept {
    return std::ranges::all_of(x, [first = x.front()](double v) { return v == first; });
}

SeriesSet::SeriesSet(std::vector<TimeSeries> series) : series_(std::move(series)) {
    if (series_.empty()) {
        throw ShapeError("series set is empty");
    }
    length_ = series_.front().size();
    std::unordered_set<std::string> seen;
    for (const auto& s : series_) {
        if (s.size() != length_) {
            throw ShapeError("series '" + s.id() + "' has length " + std::to_string(s.size()) +
                             ", expected " + std::to_string(length_));
        }
        if (!seen.insert(s.id()).second) {
            throw ValueError("duplicate series id '" + s.id() + "'");
        }
    }
}

std::vector<std::string> SeriesSet::ids() const {
    std::vector<std::string> out;
    out.reserve(series_.size());
    for (const auto& s : series_) out.push_back(s.id());
    return out;
}

std::optional<std::size_t> SeriesSet::find(const std::string& id) const {
    for (std::size_t i = 0; i < series_.size(); ++i) {
        if (series_[i].id() == id) return i;
    }
    return std::nullopt;
}

const TimeSeries& SeriesSet::at(const std::string& id) const {
    auto idx = find(id);
    if (!idx) throw SpecError("unknown series id '" + id + "'");
    return series_[*idx];
}

SeriesSet load_set(const std::vector<std::vector<double>>& rows,
                   const std::optional<std::vector<std::string>>& ids) {
    if (rows.empty()) {
        throw ShapeError("no rows to load");
    }
    if (ids && ids->size() != rows.size()) {
        throw ShapeError("got " + std::to_string(ids->size()) + " ids for " +
                         std::to_string(rows.size()) + " rows");
    }
    std::vector<TimeSeries> series;
    series.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string id = ids ? (*ids)[i] : "s" + std::to_string(i + 1);
        if (i > 0 && rows[i].size() != rows.front().size()) {
            throw ShapeError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " values, expected " +
                             std::to_string(rows.front().size()));
        }
        series.emplace_back(std::move(id), rows[i]);
    }
    return SeriesSet(std::move(series));
}

}  // namespace shapeassoc
