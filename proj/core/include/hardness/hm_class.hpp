// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "hardness/cart.hpp"
#include "hardness/dataset.hpp"
#include "hardness/geometry.hpp"
#include "hardness/profile.hpp"

namespace hardness {

struct ClassificationOptions {
    std::size_t k = 5;
    std::size_t dcp_min_leaf = 5;
    double de_quantile = 0.15;
};

// Fraction of the k' = min(k, n-1) nearest neighbours with another label.
double kdn(const DistanceMatrix& dm, const Labels& labels, std::size_t i, std::size_t k = 5);

// 1 - share of i's leaf that carries i's label.
double dcp(const CartTree& tree, const Labels& labels, std::size_t i);

// Depth of i's leaf over the tree's maximum depth; 0 for a single-leaf tree.
// Shared by the classification and regression catalogs.
double tree_depth_ratio(const CartTree& tree, std::size_t i);

// (1 - (p(true) - max_{c != true} p(c))) / 2.
double cld(std::span<const double> posterior, std::size_t true_class);

// 1 - n_{y_i} / n.
double class_balance(const Labels& labels, std::size_t i);

// Per-class, per-feature [min, max] of the features.
struct ClassRanges {
    Matrix min; // classes x features
    Matrix max;
};
ClassRanges class_feature_ranges(const Matrix& features, const Labels& labels);

// Fraction of features on which x_i falls inside the (inclusive, non-empty)
// intersection of its class range with some other class range.
double f1_overlap(const ClassRanges& ranges, const Matrix& features, const Labels& labels, std::size_t i);

// Fraction of i's MST neighbours with another label.
double n1(const MstAdjacency& mst, const Labels& labels, std::size_t i);

// a / (a + b), a = distance to the nearest same-class instance, b = nearest
// enemy distance. 1 when b = 0 < a, 0.5 when a = b = 0, 1 for singleton
// classes.
double n2(const LocalSetInfo& ls, const DistanceMatrix& dm, const Labels& labels, std::size_t i);

// 1 - |LS(i)| / (n_{y_i} - 1); 1 for singleton classes.
double lsc(const LocalSetInfo& ls, const Labels& labels, std::size_t i);

// 1 - min(1, d_ne(i) / farthest same-class distance); 1 when d_ne(i) = 0 or
// the class is a singleton.
double lsr(const LocalSetInfo& ls, const DistanceMatrix& dm, const Labels& labels, std::size_t i);

// 1 - |{j : i in LS(j)}| / (n - 1).
double usefulness(const LocalSetInfo& ls, std::size_t i);

// 1 - degree(i) / (n - 1). Used with a same-class graph here and an
// all-pairs graph in the regression catalog.
double density(const EpsilonGraph& graph, std::size_t i);

// The selected measures (default: all twelve) with shared geometry products.
// Needs n >= 4. Classes with a single member get 1.0 for N2, LSC and LSR and a
// warning.
HardnessProfile classification_profile(const Dataset& ds, const ClassificationOptions& options = {},
                                       std::span<const std::string> measures = {});

} // namespace hardness
