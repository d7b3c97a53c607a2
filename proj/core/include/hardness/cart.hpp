// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hardness/matrix.hpp"
#include "hardness/scaling.hpp"

namespace hardness {

enum class CartMode { classification, regression };

struct CartNode {
    // Internal nodes: feature >= 0, x[feature] <= threshold goes left.
    int feature = -1;
    double threshold = 0.0;
    std::size_t left = 0;
    std::size_t right = 0;

    std::size_t depth = 0;
    // Leaves only.
    std::vector<double> class_counts;
    double mean = 0.0;
    std::vector<std::size_t> members;

    bool is_leaf() const noexcept { return feature < 0; }
    std::size_t size() const noexcept { return members.size(); }
};

// Axis-aligned binary tree grown greedily without pruning. Candidate
// thresholds are midpoints between consecutive distinct sorted values; the
// best split maximises impurity decrease (Gini for classification, sum of
// squared deviations for regression) with ties going to the lowest feature
// index, then the lowest threshold. A split is legal only if both children
// keep at least min_leaf members.
class CartTree {
public:
    CartMode mode() const noexcept { return mode_; }
    std::size_t min_leaf() const noexcept { return min_leaf_; }
    std::size_t max_depth() const noexcept { return max_depth_; }
    std::size_t class_count() const noexcept { return n_classes_; }

    const std::vector<CartNode>& nodes() const noexcept { return nodes_; }
    const CartNode& node(std::size_t id) const noexcept { return nodes_[id]; }
    std::size_t leaf_count() const noexcept;

    // Leaf reached by threshold routing.
    std::size_t route(std::span<const double> x) const noexcept;
    // Leaf holding training instance `instance`; throws ParameterError when
    // the instance was not part of the training sample.
    std::size_t leaf_of(std::size_t instance) const;

    // Class frequencies of a leaf (sum to 1).
    std::vector<double> leaf_distribution(std::size_t leaf) const;

private:
    friend class CartBuilder;

    CartMode mode_ = CartMode::classification;
    std::size_t min_leaf_ = 1;
    std::size_t max_depth_ = 0;
    std::size_t n_classes_ = 0;
    std::vector<CartNode> nodes_;
    std::vector<std::size_t> leaf_of_;
};

// `rows` selects (possibly repeated) training rows of x; empty means all rows.
CartTree fit_classification_tree(const Matrix& x, std::span<const int> labels, std::size_t n_classes,
                                 std::size_t min_leaf, std::span<const std::size_t> rows = {});
CartTree fit_regression_tree(const Matrix& x, std::span<const double> y, std::size_t min_leaf,
                             std::span<const std::size_t> rows = {});

// Fits on the scaled features with the view's own target.
CartTree fit_cart(const ScaledView& view, CartMode mode, std::size_t min_leaf);

struct LeafLocation {
    std::size_t leaf = 0;
    std::size_t depth = 0;
};

LeafLocation tree_locate(const CartTree& tree, std::size_t instance);
LeafLocation tree_locate(const CartTree& tree, std::span<const double> x);

} // namespace hardness
