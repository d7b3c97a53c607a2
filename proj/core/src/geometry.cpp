// SPDX-License-Identifier: Apache-2.0

#include "hardness/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

#include "hardness/csv.hpp"
#include "hardness/errors.hpp"
#include "hardness/parallel.hpp"
#include "hardness/stats.hpp"

namespace hardness {

DistanceMatrix::DistanceMatrix(const Matrix& points) : n_(points.rows()), d_(n_ * n_, 0.0)
{
    const std::size_t m = points.cols();
    // Row i owns slots (i, j) and (j, i) for j > i, so blocks never collide.
    parallel_for(n_, [&](std::size_t i) {
        const auto xi = points.row(i);
        for (std::size_t j = i + 1; j < n_; ++j) {
            const auto xj = points.row(j);
            double sum = 0.0;
            for (std::size_t c = 0; c < m; ++c) {
                const double diff = xi[c] - xj[c];
                sum += diff * diff;
            }
            const double d = std::sqrt(sum);
            d_[i * n_ + j] = d;
            d_[j * n_ + i] = d;
        }
    });
}

std::vector<double> DistanceMatrix::upper_triangle() const
{
    std::vector<double> out;
    out.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            out.push_back(d_[i * n_ + j]);
        }
    }
    return out;
}

DistanceMatrix pairwise_distances(const ScaledView& view) { return DistanceMatrix(view.features); }

std::vector<std::size_t> knn(const DistanceMatrix& dm, std::size_t i, std::size_t k)
{
    const std::size_t n = dm.size();
    if (k < 1 || k >= n) {
        throw ParameterError("knn: k must satisfy 1 <= k <= n-1 (k=" + std::to_string(k) +
                             ", n=" + std::to_string(n) + ")");
    }
    std::vector<std::size_t> candidates;
    candidates.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
        if (j != i) {
            candidates.push_back(j);
        }
    }
    const auto row = dm.row(i);
    auto closer = [&](std::size_t a, std::size_t b) {
        return row[a] < row[b] || (row[a] == row[b] && a < b);
    };
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k), candidates.end(),
                      closer);
    candidates.resize(k);
    return candidates;
}

MstAdjacency::MstAdjacency(std::size_t n, std::vector<MstEdge> edges) : edges_(std::move(edges)), neighbors_(n)
{
    for (const auto& e : edges_) {
        neighbors_[e.u].push_back(e.v);
        neighbors_[e.v].push_back(e.u);
    }
    for (auto& nb : neighbors_) {
        std::sort(nb.begin(), nb.end());
    }
}

double MstAdjacency::total_weight() const noexcept
{
    double total = 0.0;
    for (const auto& e : edges_) {
        total += e.weight;
    }
    return total;
}

void MstAdjacency::write_csv(std::ostream& out) const
{
    out << "i,j,weight\n";
    for (const auto& e : edges_) {
        out << e.u << ',' << e.v << ',' << csv::format_real(e.weight, 17) << '\n';
    }
}

MstAdjacency build_mst(const DistanceMatrix& dm)
{
    const std::size_t n = dm.size();
    if (n < 2) {
        throw ParameterError("build_mst: need at least 2 instances");
    }
    // Prim's algorithm on the dense graph. best_from[v] is the tree vertex
    // giving v's cheapest connecting edge under the (weight, lo, hi) order.
    auto key = [](double w, std::size_t a, std::size_t b) {
        return std::make_tuple(w, std::min(a, b), std::max(a, b));
    };
    std::vector<bool> in_tree(n, false);
    std::vector<double> best_w(n, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> best_from(n, 0);
    in_tree[0] = true;
    for (std::size_t v = 1; v < n; ++v) {
        best_w[v] = dm(0, v);
        best_from[v] = 0;
    }

    std::vector<MstEdge> edges;
    edges.reserve(n - 1);
    for (std::size_t step = 1; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (in_tree[v]) {
                continue;
            }
            if (pick == n || key(best_w[v], best_from[v], v) < key(best_w[pick], best_from[pick], pick)) {
                pick = v;
            }
        }
        in_tree[pick] = true;
        edges.push_back({std::min(pick, best_from[pick]), std::max(pick, best_from[pick]), best_w[pick]});
        for (std::size_t u = 0; u < n; ++u) {
            if (in_tree[u]) {
                continue;
            }
            const double w = dm(pick, u);
            if (key(w, pick, u) < key(best_w[u], best_from[u], u)) {
                best_w[u] = w;
                best_from[u] = pick;
            }
        }
    }
    std::sort(edges.begin(), edges.end(), [](const MstEdge& a, const MstEdge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    return MstAdjacency(n, std::move(edges));
}

LocalSetInfo local_sets(const DistanceMatrix& dm, const Labels& labels)
{
    if (labels.class_count() < 2) {
        throw ValidationError("local sets need at least 2 classes");
    }
    const std::size_t n = dm.size();
    if (labels.size() != n) {
        throw ParameterError("local_sets: label count does not match distance matrix");
    }
    LocalSetInfo info;
    info.nearest_enemy.assign(n, 0);
    info.enemy_distance.assign(n, 0.0);
    info.members.assign(n, {});
    parallel_for(n, [&](std::size_t i) {
        const auto row = dm.row(i);
        std::size_t enemy = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (labels.index[j] != labels.index[i] && (enemy == n || row[j] < row[enemy])) {
                enemy = j;
            }
        }
        info.nearest_enemy[i] = enemy;
        info.enemy_distance[i] = row[enemy];
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && row[j] < row[enemy]) {
                info.members[i].push_back(j);
            }
        }
    });
    return info;
}

EpsilonGraph::EpsilonGraph(double epsilon, bool same_class_only, std::vector<std::vector<std::size_t>> adjacency)
    : epsilon_(epsilon), same_class_only_(same_class_only), adjacency_(std::move(adjacency))
{
}

std::size_t EpsilonGraph::edge_count() const noexcept
{
    std::size_t degree_sum = 0;
    for (const auto& nb : adjacency_) {
        degree_sum += nb.size();
    }
    return degree_sum / 2;
}

EpsilonGraph epsilon_graph(const DistanceMatrix& dm, double quantile, bool same_class_only, const Labels* labels)
{
    if (!(quantile > 0.0 && quantile <= 1.0)) {
        throw ParameterError("epsilon_graph: quantile must lie in (0, 1]");
    }
    if (same_class_only && labels == nullptr) {
        throw ParameterError("epsilon_graph: same_class_only requires labels");
    }
    const std::size_t n = dm.size();
    if (n < 2) {
        throw ParameterError("epsilon_graph: need at least 2 instances");
    }
    const double eps = linear_quantile(dm.upper_triangle(), quantile);
    std::vector<std::vector<std::size_t>> adjacency(n);
    parallel_for(n, [&](std::size_t i) {
        const auto row = dm.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || row[j] > eps) {
                continue;
            }
            if (same_class_only && labels->index[i] != labels->index[j]) {
                continue;
            }
            adjacency[i].push_back(j);
        }
    });
    return EpsilonGraph(eps, same_class_only, std::move(adjacency));
}

} // namespace hardness
