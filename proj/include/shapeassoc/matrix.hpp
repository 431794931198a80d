#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace shapeassoc {

/// Square row-major matrix with row/column labels.
class LabeledMatrix {
public:
    LabeledMatrix() = default;
    /// Zero-filled matrix over the given labels.
    explicit LabeledMatrix(std::vector<std::string> ids);
    /// Throws ShapeError unless values.size() == ids.size()^2.
    LabeledMatrix(std::vector<std::string> ids, std::vector<double> values);

    [[nodiscard]] std::size_t size() const noexcept { return ids_.size(); }
    [[nodiscard]] const std::vector<std::string>& ids() const noexcept { return ids_; }
    [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }

    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept {
        return values_[i * ids_.size() + j];
    }
    double& operator()(std::size_t i, std::size_t j) noexcept { return values_[i * ids_.size() + j]; }

    friend bool operator==(const LabeledMatrix&, const LabeledMatrix&) = default;

private:
    std::vector<std::string> ids_;
    std::vector<double> values_;
};

}  // namespace shapeassoc
