// SPDX-License-Identifier: Apache-2.0

#include "hardness/cart.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "hardness/errors.hpp"

namespace hardness {

namespace {

constexpr std::size_t no_leaf = std::numeric_limits<std::size_t>::max();

struct Split {
    int feature = -1;
    double threshold = 0.0;
    double decrease = 0.0;
};

} // namespace

class CartBuilder {
public:
    CartBuilder(const Matrix& x, std::span<const int> labels, std::size_t n_classes, std::span<const double> y,
                CartMode mode, std::size_t min_leaf)
        : x_(x), labels_(labels), y_(y), n_classes_(n_classes), mode_(mode), min_leaf_(std::max<std::size_t>(1, min_leaf))
    {
    }

    CartTree build(std::vector<std::size_t> rows)
    {
        tree_.mode_ = mode_;
        tree_.min_leaf_ = min_leaf_;
        tree_.n_classes_ = n_classes_;
        tree_.leaf_of_.assign(x_.rows(), no_leaf);
        grow(std::move(rows), 0);
        return std::move(tree_);
    }

private:
    double impurity(std::span<const std::size_t> rows) const
    {
        const auto n = static_cast<double>(rows.size());
        if (mode_ == CartMode::classification) {
            std::vector<double> counts(n_classes_, 0.0);
            for (auto r : rows) {
                counts[static_cast<std::size_t>(labels_[r])] += 1.0;
            }
            double sq = 0.0;
            for (double c : counts) {
                sq += c * c;
            }
            return n - sq / n;
        }
        double mu = 0.0;
        for (auto r : rows) {
            mu += y_[r];
        }
        mu /= n;
        double sse = 0.0;
        for (auto r : rows) {
            sse += (y_[r] - mu) * (y_[r] - mu);
        }
        return sse;
    }

    bool is_pure(std::span<const std::size_t> rows) const
    {
        for (auto r : rows) {
            if (mode_ == CartMode::classification ? labels_[r] != labels_[rows.front()] : y_[r] != y_[rows.front()]) {
                return false;
            }
        }
        return true;
    }

    Split best_split(std::span<const std::size_t> rows, double parent) const
    {
        const std::size_t n = rows.size();
        Split best;
        const double min_gain = 1e-12 * std::max(1.0, parent);
        std::vector<std::size_t> order(rows.begin(), rows.end());

        double y_mean = 0.0;
        if (mode_ == CartMode::regression) {
            for (auto r : rows) {
                y_mean += y_[r];
            }
            y_mean /= static_cast<double>(n);
        }

        std::vector<double> left_counts(n_classes_);
        std::vector<double> total_counts(n_classes_, 0.0);
        if (mode_ == CartMode::classification) {
            for (auto r : rows) {
                total_counts[static_cast<std::size_t>(labels_[r])] += 1.0;
            }
        }

        for (std::size_t f = 0; f < x_.cols(); ++f) {
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                const double xa = x_(a, f);
                const double xb = x_(b, f);
                return xa < xb || (xa == xb && a < b);
            });
            std::fill(left_counts.begin(), left_counts.end(), 0.0);
            double left_sum = 0.0;
            double left_sq = 0.0;
            double total_sum = 0.0;
            double total_sq = 0.0;
            if (mode_ == CartMode::regression) {
                for (auto r : order) {
                    const double d = y_[r] - y_mean;
                    total_sum += d;
                    total_sq += d * d;
                }
            }
            for (std::size_t p = 0; p + 1 < n; ++p) {
                const std::size_t r = order[p];
                if (mode_ == CartMode::classification) {
                    left_counts[static_cast<std::size_t>(labels_[r])] += 1.0;
                } else {
                    const double d = y_[r] - y_mean;
                    left_sum += d;
                    left_sq += d * d;
                }
                const double lo = x_(r, f);
                const double hi = x_(order[p + 1], f);
                const std::size_t n_left = p + 1;
                const std::size_t n_right = n - n_left;
                if (lo == hi || n_left < min_leaf_ || n_right < min_leaf_) {
                    continue;
                }
                double children = 0.0;
                const auto nl = static_cast<double>(n_left);
                const auto nr = static_cast<double>(n_right);
                if (mode_ == CartMode::classification) {
                    double sql = 0.0;
                    double sqr = 0.0;
                    for (std::size_t c = 0; c < n_classes_; ++c) {
                        const double right = total_counts[c] - left_counts[c];
                        sql += left_counts[c] * left_counts[c];
                        sqr += right * right;
                    }
                    children = (nl - sql / nl) + (nr - sqr / nr);
                } else {
                    const double right_sum = total_sum - left_sum;
                    const double right_sq = total_sq - left_sq;
                    children = std::max(0.0, left_sq - left_sum * left_sum / nl) +
                               std::max(0.0, right_sq - right_sum * right_sum / nr);
                }
                const double decrease = parent - children;
                if (decrease > min_gain && decrease > best.decrease) {
                    double threshold = lo + (hi - lo) / 2.0;
                    if (!(threshold < hi)) {
                        threshold = lo;
                    }
                    best = {static_cast<int>(f), threshold, decrease};
                }
            }
        }
        return best;
    }

    std::size_t grow(std::vector<std::size_t> rows, std::size_t depth)
    {
        const std::size_t id = tree_.nodes_.size();
        tree_.nodes_.emplace_back();
        tree_.nodes_[id].depth = depth;

        Split split;
        if (rows.size() >= 2 * min_leaf_ && !is_pure(rows)) {
            split = best_split(rows, impurity(rows));
        }

        if (split.feature < 0) {
            make_leaf(id, std::move(rows), depth);
            return id;
        }

        std::vector<std::size_t> left;
        std::vector<std::size_t> right;
        for (auto r : rows) {
            (x_(r, static_cast<std::size_t>(split.feature)) <= split.threshold ? left : right).push_back(r);
        }
        rows.clear();
        rows.shrink_to_fit();
        const std::size_t l = grow(std::move(left), depth + 1);
        const std::size_t r = grow(std::move(right), depth + 1);
        auto& node = tree_.nodes_[id];
        node.feature = split.feature;
        node.threshold = split.threshold;
        node.left = l;
        node.right = r;
        return id;
    }

    void make_leaf(std::size_t id, std::vector<std::size_t> rows, std::size_t depth)
    {
        auto& node = tree_.nodes_[id];
        if (mode_ == CartMode::classification) {
            node.class_counts.assign(n_classes_, 0.0);
            for (auto r : rows) {
                node.class_counts[static_cast<std::size_t>(labels_[r])] += 1.0;
            }
        } else {
            double sum = 0.0;
            for (auto r : rows) {
                sum += y_[r];
            }
            node.mean = rows.empty() ? 0.0 : sum / static_cast<double>(rows.size());
        }
        for (auto r : rows) {
            tree_.leaf_of_[r] = id;
        }
        node.members = std::move(rows);
        tree_.max_depth_ = std::max(tree_.max_depth_, depth);
    }

    const Matrix& x_;
    std::span<const int> labels_;
    std::span<const double> y_;
    std::size_t n_classes_;
    CartMode mode_;
    std::size_t min_leaf_;
    CartTree tree_;
};

std::size_t CartTree::leaf_count() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [](const CartNode& n) { return n.is_leaf(); }));
}

std::size_t CartTree::route(std::span<const double> x) const noexcept
{
    std::size_t id = 0;
    while (!nodes_[id].is_leaf()) {
        const auto& node = nodes_[id];
        id = x[static_cast<std::size_t>(node.feature)] <= node.threshold ? node.left : node.right;
    }
    return id;
}

std::size_t CartTree::leaf_of(std::size_t instance) const
{
    if (instance >= leaf_of_.size() || leaf_of_[instance] == no_leaf) {
        throw ParameterError("tree_locate: instance " + std::to_string(instance) + " was not in the training sample");
    }
    return leaf_of_[instance];
}

std::vector<double> CartTree::leaf_distribution(std::size_t leaf) const
{
    const auto& node = nodes_[leaf];
    std::vector<double> p = node.class_counts;
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    if (total > 0.0) {
        for (auto& v : p) {
            v /= total;
        }
    }
    return p;
}

namespace {

std::vector<std::size_t> all_rows(std::span<const std::size_t> rows, std::size_t n)
{
    if (!rows.empty()) {
        return {rows.begin(), rows.end()};
    }
    std::vector<std::size_t> out(n);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
}

} // namespace

CartTree fit_classification_tree(const Matrix& x, std::span<const int> labels, std::size_t n_classes,
                                 std::size_t min_leaf, std::span<const std::size_t> rows)
{
    if (labels.size() != x.rows()) {
        throw ParameterError("fit_classification_tree: label count does not match rows");
    }
    auto idx = all_rows(rows, x.rows());
    if (idx.empty()) {
        throw ParameterError("fit_classification_tree: empty training sample");
    }
    return CartBuilder(x, labels, n_classes, {}, CartMode::classification, min_leaf).build(std::move(idx));
}

CartTree fit_regression_tree(const Matrix& x, std::span<const double> y, std::size_t min_leaf,
                             std::span<const std::size_t> rows)
{
    if (y.size() != x.rows()) {
        throw ParameterError("fit_regression_tree: response count does not match rows");
    }
    auto idx = all_rows(rows, x.rows());
    if (idx.empty()) {
        throw ParameterError("fit_regression_tree: empty training sample");
    }
    return CartBuilder(x, {}, 0, y, CartMode::regression, min_leaf).build(std::move(idx));
}

CartTree fit_cart(const ScaledView& view, CartMode mode, std::size_t min_leaf)
{
    if (view.size() < 2) {
        throw ParameterError("fit_cart: need at least 2 instances");
    }
    if (mode == CartMode::classification) {
        const auto& labels = view.class_labels();
        return fit_classification_tree(view.features, labels.index, labels.class_count(), min_leaf);
    }
    if (view.kind != TaskKind::regression) {
        throw ValidationError("fit_cart: regression tree needs a continuous target");
    }
    return fit_regression_tree(view.features, view.responses, min_leaf);
}

LeafLocation tree_locate(const CartTree& tree, std::size_t instance)
{
    const auto leaf = tree.leaf_of(instance);
    return {leaf, tree.node(leaf).depth};
}

LeafLocation tree_locate(const CartTree& tree, std::span<const double> x)
{
    const auto leaf = tree.route(x);
    return {leaf, tree.node(leaf).depth};
}

} // namespace hardness
