#pragma once

#include "shapeassoc/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace shapeassoc {

/// Symmetric similarity matrix with values in [0,1] and unit diagonal.
class SimilarityMatrix {
public:
    /// Values within 1e-9 of [0,1] are clamped, others rejected (ValueError).
    /// Asymmetry above 1e-9 or a diagonal away from 1 is a ValueError; the
    /// stored matrix is exactly symmetric with an exact unit diagonal.
    SimilarityMatrix(std::vector<std::string> ids, std::vector<double> values);
    explicit SimilarityMatrix(const LabeledMatrix& m) : SimilarityMatrix(m.ids(), m.values()) {}

    /// S_A = |A| for an association matrix.
    [[nodiscard]] static SimilarityMatrix from_association(const LabeledMatrix& a);

    [[nodiscard]] std::size_t size() const noexcept { return ids_.size(); }
    [[nodiscard]] const std::vector<std::string>& ids() const noexcept { return ids_; }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept {
        return values_[i * ids_.size() + j];
    }
    [[nodiscard]] LabeledMatrix to_matrix() const { return LabeledMatrix(ids_, values_); }

private:
    std::vector<std::string> ids_;
    std::vector<double> values_;
};

/// Nodes are numbered as in scipy: leaves 0..n-1, merge i creates node n+i.
struct MergeStep {
    std::size_t left = 0;
    std::size_t right = 0;
    double level = 0.0;

    friend bool operator==(const MergeStep&, const MergeStep&) = default;
};

struct Dendrogram {
    std::vector<std::string> leaves;
    std::vector<MergeStep> merges;

    [[nodiscard]] std::size_t node_count() const noexcept { return leaves.size() + merges.size(); }
    /// Leaf indices under a node, ascending.
    [[nodiscard]] std::vector<std::size_t> members(std::size_t node) const;

    friend bool operator==(const Dendrogram&, const Dendrogram&) = default;
};

/// Merges the two clusters with the largest cross-pair similarity until one
/// remains. Ties go to the lexicographically smallest object pair (i, j), i < j;
/// the left child is the cluster holding i. Throws SpecError for < 2 objects.
[[nodiscard]] Dendrogram single_linkage(const SimilarityMatrix& m);

/// Leaf-index sets of every node, sorted. Two dendrograms with equal
/// hierarchies have equal results.
[[nodiscard]] std::vector<std::vector<std::size_t>> hierarchy(const Dendrogram& d);

/// True iff some node has exactly this leaf set. Throws SpecError for an empty
/// set or unknown ids.
[[nodiscard]] bool contains_cluster(const Dendrogram& d, const std::vector<std::string>& ids);

/// Partition into k clusters by undoing the k-1 last merges. Groups are listed by
/// their first leaf; members keep leaf order. Throws SpecError unless 1 <= k <= #leaves.
[[nodiscard]] std::vector<std::vector<std::string>> cut(const Dendrogram& d, std::size_t k);

/// Newick with branch length 1 - (level of the parent merge).
[[nodiscard]] std::string to_newick(const Dendrogram& d);

/// One merge per line from the root down, indented by depth: "<level> <ids...>".
[[nodiscard]] std::string to_text(const Dendrogram& d);

}  // namespace shapeassoc
