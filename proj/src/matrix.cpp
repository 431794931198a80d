#include "shapeassoc/matrix.hpp"

#include "shapeassoc/error.hpp"

namespace shapeassoc {

LabeledMatrix::LabeledMatrix(std::vector<std::string> ids)
    : ids_(std::move(ids)), values_(ids_.size() * ids_.size(), 0.0) {}

LabeledMatrix::LabeledMatrix(std::vector<std::string> ids, std::vector<double> values)
    : ids_(std::move(ids)), values_(std::move(values)) {
    if (values_.size() != ids_.size() * ids_.size()) {
        throw ShapeError("matrix has " + std::to_string(values_.size()) + " values for " +
                         std::to_string(ids_.size()) + " labels");
    }
}

}  // namespace shapeassoc
