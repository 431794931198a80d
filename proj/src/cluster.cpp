#include "shapeassoc/cluster.hpp"

#include "shapeassoc/error.hpp"
#include "shapeassoc/numfmt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>

namespace shapeassoc {

namespace {

constexpr double kTol = 1e-9;

std::string cell(const std::vector<std::string>& ids, std::size_t i, std::size_t j) {
    return "(" + ids[i] + ", " + ids[j] + ")";
}

}  // namespace

SimilarityMatrix::SimilarityMatrix(std::vector<std::string> ids, std::vector<double> values)
    : ids_(std::move(ids)), values_(std::move(values)) {
    const std::size_t n = ids_.size();
    if (values_.size() != n * n) throw ShapeError("similarity matrix: expected " + std::to_string(n * n) + " values");
    for (std::size_t i = 0; i < n; ++i) {
        double& d = values_[i * n + i];
        if (!(std::abs(d - 1.0) <= kTol)) throw ValueError("similarity matrix: diagonal at " + ids_[i] + " is not 1");
        d = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            double& a = values_[i * n + j];
            double& b = values_[j * n + i];
            if (!std::isfinite(a) || !std::isfinite(b)) throw ValueError("similarity matrix: non-finite value at " + cell(ids_, i, j));
            if (std::abs(a - b) > kTol) throw ValueError("similarity matrix: asymmetric at " + cell(ids_, i, j));
            if (a < -kTol || a > 1.0 + kTol) throw ValueError("similarity matrix: value outside [0,1] at " + cell(ids_, i, j));
            a = std::clamp(a, 0.0, 1.0);
            b = a;
        }
    }
}

SimilarityMatrix SimilarityMatrix::from_association(const LabeledMatrix& a) {
    std::vector<double> v(a.values());
    for (double& x : v) x = std::abs(x);
    return SimilarityMatrix(a.ids(), std::move(v));
}

std::vector<std::size_t> Dendrogram::members(std::size_t node) const {
    std::vector<std::size_t> out;
    std::vector<std::size_t> stack{node};
    const std::size_t n = leaves.size();
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        if (v < n) {
            out.push_back(v);
        } else {
            const MergeStep& m = merges.at(v - n);
            stack.push_back(m.left);
            stack.push_back(m.right);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Dendrogram single_linkage(const SimilarityMatrix& m) {
    const std::size_t n = m.size();
    if (n < 2) throw SpecError("single_linkage: need at least 2 objects");
    Dendrogram d;
    d.leaves = m.ids();
    std::vector<std::size_t> node(n);
    std::iota(node.begin(), node.end(), 0);
    for (std::size_t step = 0; step + 1 < n; ++step) {
        std::size_t bi = 0;
        std::size_t bj = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (node[i] != node[j] && m(i, j) > best) {
                    best = m(i, j);
                    bi = i;
                    bj = j;
                }
        const std::size_t left = node[bi];
        const std::size_t right = node[bj];
        const std::size_t merged = n + step;
        d.merges.push_back({left, right, best});
        for (std::size_t& c : node)
            if (c == left || c == right) c = merged;
    }
    return d;
}

std::vector<std::vector<std::size_t>> hierarchy(const Dendrogram& d) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t v = 0; v < d.node_count(); ++v) out.push_back(d.members(v));
    std::sort(out.begin(), out.end());
    return out;
}

bool contains_cluster(const Dendrogram& d, const std::vector<std::string>& ids) {
    if (ids.empty()) throw SpecError("contains_cluster: empty cluster");
    std::set<std::size_t> wanted;
    for (const auto& id : ids) {
        const auto it = std::find(d.leaves.begin(), d.leaves.end(), id);
        if (it == d.leaves.end()) throw SpecError("contains_cluster: unknown id '" + id + "'");
        wanted.insert(static_cast<std::size_t>(it - d.leaves.begin()));
    }
    const std::vector<std::size_t> target(wanted.begin(), wanted.end());
    for (std::size_t v = 0; v < d.node_count(); ++v)
        if (d.members(v) == target) return true;
    return false;
}

std::vector<std::vector<std::string>> cut(const Dendrogram& d, std::size_t k) {
    const std::size_t n = d.leaves.size();
    if (k < 1 || k > n) throw SpecError("cut: k must be in [1, " + std::to_string(n) + "]");
    std::vector<std::size_t> owner(d.node_count());
    std::iota(owner.begin(), owner.end(), 0);
    // owner[v] is the representative leaf of the cluster that node v belongs to.
    for (std::size_t s = 0; s < n - k; ++s) {
        const auto& m = d.merges[s];
        const std::size_t a = owner[m.left];
        const std::size_t b = owner[m.right];
        const std::size_t rep = std::min(a, b);
        for (std::size_t v = 0; v < n + s; ++v)
            if (owner[v] == a || owner[v] == b) owner[v] = rep;
        owner[n + s] = rep;
    }
    std::vector<std::vector<std::string>> groups;
    std::vector<std::size_t> group_of(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = owner[i];
        if (group_of[r] == n) {
            group_of[r] = groups.size();
            groups.emplace_back();
        }
        groups[group_of[r]].push_back(d.leaves[i]);
    }
    return groups;
}

namespace {

std::string newick_label(const std::string& s) {
    const bool plain = !s.empty() && s.find_first_of(" \t\n()[]':;,") == std::string::npos;
    if (plain) return s;
    std::string out = "'";
    for (char c : s) {
        out += c;
        if (c == '\'') out += c;
    }
    return out + "'";
}

std::string branch_length(double level) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", 1.0 - level);
    return buf;
}

}  // namespace

std::string to_newick(const Dendrogram& d) {
    const std::size_t n = d.leaves.size();
    std::function<std::string(std::size_t)> render = [&](std::size_t v) -> std::string {
        if (v < n) return newick_label(d.leaves[v]);
        const MergeStep& m = d.merges[v - n];
        const std::string len = branch_length(m.level);
        return "(" + render(m.left) + ":" + len + "," + render(m.right) + ":" + len + ")";
    };
    if (n == 1) return newick_label(d.leaves[0]) + ";";
    return render(d.node_count() - 1) + ";";
}

std::string to_text(const Dendrogram& d) {
    const std::size_t n = d.leaves.size();
    std::string out;
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t v, std::size_t depth) {
        if (v < n) return;
        const MergeStep& m = d.merges[v - n];
        out.append(2 * depth, ' ');
        out += format_roundtrip(m.level);
        for (std::size_t leaf : d.members(v)) out += " " + d.leaves[leaf];
        out += '\n';
        walk(m.left, depth + 1);
        walk(m.right, depth + 1);
    };
    if (!d.merges.empty()) walk(d.node_count() - 1, 0);
    return out;
}

}  // namespace shapeassoc
