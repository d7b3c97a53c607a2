// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "hardness/dataset.hpp"
#include "hardness/matrix.hpp"
#include "hardness/scaling.hpp"

namespace hardness {

// Symmetric n x n Euclidean distances with an exact zero diagonal.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(const Matrix& points);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return d_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const noexcept { return {d_.data() + i * n_, n_}; }

    // The n(n-1)/2 entries above the diagonal, row by row.
    std::vector<double> upper_triangle() const;

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

DistanceMatrix pairwise_distances(const ScaledView& view);

// The k instances closest to i (i itself excluded), nearest first; equal
// distances resolve to the lower index. Throws ParameterError unless
// 1 <= k <= n-1.
std::vector<std::size_t> knn(const DistanceMatrix& dm, std::size_t i, std::size_t k);

struct MstEdge {
    std::size_t u = 0; // u < v
    std::size_t v = 0;
    double weight = 0.0;

    friend bool operator==(const MstEdge&, const MstEdge&) = default;
};

class MstAdjacency {
public:
    MstAdjacency() = default;
    MstAdjacency(std::size_t n, std::vector<MstEdge> edges);

    std::size_t size() const noexcept { return neighbors_.size(); }
    const std::vector<MstEdge>& edges() const noexcept { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t i) const noexcept { return neighbors_[i]; }
    double total_weight() const noexcept;

    // Debug dump: header "i,j,weight", one edge per line.
    void write_csv(std::ostream& out) const;

private:
    std::vector<MstEdge> edges_;
    std::vector<std::vector<std::size_t>> neighbors_;
};

// Minimum spanning tree over the complete distance graph. Edges are compared
// by (weight, min endpoint, max endpoint), which makes the tree unique.
MstAdjacency build_mst(const DistanceMatrix& dm);

// Per-instance nearest enemy and local set (instances strictly closer than the
// nearest enemy, which are necessarily same-class).
struct LocalSetInfo {
    std::vector<std::size_t> nearest_enemy;
    std::vector<double> enemy_distance;
    std::vector<std::vector<std::size_t>> members;
};

LocalSetInfo local_sets(const DistanceMatrix& dm, const Labels& labels);

class EpsilonGraph {
public:
    EpsilonGraph() = default;
    EpsilonGraph(double epsilon, bool same_class_only, std::vector<std::vector<std::size_t>> adjacency);

    double epsilon() const noexcept { return epsilon_; }
    bool same_class_only() const noexcept { return same_class_only_; }
    std::size_t size() const noexcept { return adjacency_.size(); }
    std::size_t degree(std::size_t i) const noexcept { return adjacency_[i].size(); }
    const std::vector<std::size_t>& neighbors(std::size_t i) const noexcept { return adjacency_[i]; }
    std::size_t edge_count() const noexcept;

private:
    double epsilon_ = 0.0;
    bool same_class_only_ = false;
    std::vector<std::vector<std::size_t>> adjacency_;
};

// epsilon is the linear-interpolation quantile of all off-diagonal distances;
// (i, j) is an edge when d(i, j) <= epsilon (and the labels agree, when
// same_class_only). `labels` may be null only if same_class_only is false.
EpsilonGraph epsilon_graph(const DistanceMatrix& dm, double quantile, bool same_class_only,
                           const Labels* labels = nullptr);

} // namespace hardness
