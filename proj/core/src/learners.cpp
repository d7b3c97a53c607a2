// SPDX-License-Identifier: Apache-2.0

#include "hardness/learners.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hardness/errors.hpp"
#include "hardness/rng.hpp"

namespace hardness {

namespace {

// Indices of the k training rows nearest to x; ties by lower row index.
std::vector<std::size_t> nearest_rows(const Matrix& train, std::span<const double> x, std::size_t k)
{
    const std::size_t n = train.rows();
    std::vector<double> dist(n);
    for (std::size_t r = 0; r < n; ++r) {
        const auto row = train.row(r);
        double s = 0.0;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const double d = row[c] - x[c];
            s += d * d;
        }
        dist[r] = std::sqrt(s);
    }
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    k = std::min(k, n);
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                      [&](std::size_t a, std::size_t b) { return dist[a] < dist[b] || (dist[a] == dist[b] && a < b); });
    idx.resize(k);
    return idx;
}

std::vector<std::size_t> bootstrap(std::size_t n, SplitMix64& rng)
{
    std::vector<std::size_t> rows(n);
    for (auto& r : rows) {
        r = static_cast<std::size_t>(rng.below(n));
    }
    return rows;
}

double sigmoid(double z)
{
    if (z >= 0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

} // namespace

void KnnClassifier::fit(const Matrix& x, std::span<const int> labels, std::size_t n_classes)
{
    if (x.rows() == 0 || labels.size() != x.rows()) {
        throw ParameterError("KnnClassifier::fit: bad training sample");
    }
    x_ = x;
    labels_.assign(labels.begin(), labels.end());
    n_classes_ = n_classes;
}

std::vector<double> KnnClassifier::predict_proba(std::span<const double> x) const
{
    const auto nb = nearest_rows(x_, x, k_);
    std::vector<double> p(n_classes_, 0.0);
    for (auto r : nb) {
        p[static_cast<std::size_t>(labels_[r])] += 1.0;
    }
    for (auto& v : p) {
        v /= static_cast<double>(nb.size());
    }
    return p;
}

void TreeClassifier::fit(const Matrix& x, std::span<const int> labels, std::size_t n_classes)
{
    tree_ = fit_classification_tree(x, labels, n_classes, min_leaf_);
}

std::vector<double> TreeClassifier::predict_proba(std::span<const double> x) const
{
    return tree_.leaf_distribution(tree_.route(x));
}

void LogisticRegression::fit(const Matrix& x, std::span<const int> labels, std::size_t n_classes)
{
    const std::size_t n = x.rows();
    const std::size_t m = x.cols();
    if (n == 0 || labels.size() != n) {
        throw ParameterError("LogisticRegression::fit: bad training sample");
    }
    weights_ = Matrix(n_classes, m + 1);
    std::vector<double> grad(m + 1);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t c = 0; c < n_classes; ++c) {
        auto w = weights_.row(c);
        for (std::size_t epoch = 0; epoch < epochs_; ++epoch) {
            std::fill(grad.begin(), grad.end(), 0.0);
            for (std::size_t r = 0; r < n; ++r) {
                const auto row = x.row(r);
                double z = w[m];
                for (std::size_t f = 0; f < m; ++f) {
                    z += w[f] * row[f];
                }
                const double target = labels[r] == static_cast<int>(c) ? 1.0 : 0.0;
                const double err = sigmoid(z) - target;
                for (std::size_t f = 0; f < m; ++f) {
                    grad[f] += err * row[f];
                }
                grad[m] += err;
            }
            for (std::size_t f = 0; f <= m; ++f) {
                w[f] -= learning_rate_ * grad[f] * inv_n;
            }
        }
    }
}

std::vector<double> LogisticRegression::predict_proba(std::span<const double> x) const
{
    const std::size_t n_classes = weights_.rows();
    const std::size_t m = weights_.cols() - 1;
    std::vector<double> p(n_classes);
    double total = 0.0;
    for (std::size_t c = 0; c < n_classes; ++c) {
        const auto w = weights_.row(c);
        double z = w[m];
        for (std::size_t f = 0; f < m; ++f) {
            z += w[f] * x[f];
        }
        p[c] = sigmoid(z);
        total += p[c];
    }
    for (auto& v : p) {
        v = total > 0.0 ? v / total : 1.0 / static_cast<double>(n_classes);
    }
    return p;
}

void BaggedTreeClassifier::fit(const Matrix& x, std::span<const int> labels, std::size_t n_classes)
{
    n_classes_ = n_classes;
    ensemble_.clear();
    SplitMix64 rng(seed_);
    for (std::size_t t = 0; t < trees_; ++t) {
        const auto rows = bootstrap(x.rows(), rng);
        ensemble_.push_back(fit_classification_tree(x, labels, n_classes, min_leaf_, rows));
    }
}

std::vector<double> BaggedTreeClassifier::predict_proba(std::span<const double> x) const
{
    std::vector<double> p(n_classes_, 0.0);
    for (const auto& tree : ensemble_) {
        const auto leaf = tree.leaf_distribution(tree.route(x));
        for (std::size_t c = 0; c < n_classes_; ++c) {
            p[c] += leaf[c];
        }
    }
    for (auto& v : p) {
        v /= static_cast<double>(ensemble_.size());
    }
    return p;
}

void LinearRegressor::fit(const Matrix& x, std::span<const double> y) { fit_ = fit_ridge(x, y, lambda_); }

double LinearRegressor::predict(std::span<const double> x) const { return fit_.predict(x); }

void KnnRegressor::fit(const Matrix& x, std::span<const double> y)
{
    if (x.rows() == 0 || y.size() != x.rows()) {
        throw ParameterError("KnnRegressor::fit: bad training sample");
    }
    x_ = x;
    y_.assign(y.begin(), y.end());
}

double KnnRegressor::predict(std::span<const double> x) const
{
    const auto nb = nearest_rows(x_, x, k_);
    double s = 0.0;
    for (auto r : nb) {
        s += y_[r];
    }
    return s / static_cast<double>(nb.size());
}

void TreeRegressor::fit(const Matrix& x, std::span<const double> y) { tree_ = fit_regression_tree(x, y, min_leaf_); }

double TreeRegressor::predict(std::span<const double> x) const { return tree_.node(tree_.route(x)).mean; }

void BaggedTreeRegressor::fit(const Matrix& x, std::span<const double> y)
{
    ensemble_.clear();
    SplitMix64 rng(seed_);
    for (std::size_t t = 0; t < trees_; ++t) {
        const auto rows = bootstrap(x.rows(), rng);
        ensemble_.push_back(fit_regression_tree(x, y, min_leaf_, rows));
    }
}

double BaggedTreeRegressor::predict(std::span<const double> x) const
{
    double s = 0.0;
    for (const auto& tree : ensemble_) {
        s += tree.node(tree.route(x)).mean;
    }
    return s / static_cast<double>(ensemble_.size());
}

std::vector<std::string> LearnerPool::names() const
{
    std::vector<std::string> out;
    for (const auto& l : learners) {
        out.push_back(l.name);
    }
    return out;
}

std::uint64_t LearnerPool::job_seed(std::size_t learner, std::size_t fold) const noexcept
{
    return derive_seed(derive_seed(seed, learner), fold);
}

LearnerPool LearnerPool::truncated(std::size_t count) const
{
    LearnerPool out = *this;
    if (count < out.learners.size()) {
        out.learners.resize(count);
    }
    return out;
}

LearnerPool default_pool(TaskKind kind, std::uint64_t seed)
{
    LearnerPool pool;
    pool.kind = kind;
    pool.seed = seed;
    if (kind == TaskKind::classification) {
        auto add = [&](std::string name, std::function<std::unique_ptr<Classifier>(std::uint64_t)> make) {
            pool.learners.push_back({std::move(name), std::move(make), {}});
        };
        add("gaussian_nb", [](std::uint64_t) { return std::make_unique<GaussianNaiveBayes>(); });
        add("knn5", [](std::uint64_t) { return std::make_unique<KnnClassifier>(5); });
        add("cart", [](std::uint64_t) { return std::make_unique<TreeClassifier>(2); });
        add("logistic", [](std::uint64_t) { return std::make_unique<LogisticRegression>(500, 0.1); });
        add("bagged_cart", [](std::uint64_t s) { return std::make_unique<BaggedTreeClassifier>(20, 1, s); });
    } else {
        auto add = [&](std::string name, std::function<std::unique_ptr<Regressor>(std::uint64_t)> make) {
            pool.learners.push_back({std::move(name), {}, std::move(make)});
        };
        add("ols", [](std::uint64_t) { return std::make_unique<LinearRegressor>(0.0); });
        add("ridge", [](std::uint64_t) { return std::make_unique<LinearRegressor>(1e-2); });
        add("knn5", [](std::uint64_t) { return std::make_unique<KnnRegressor>(5); });
        add("cart", [](std::uint64_t) { return std::make_unique<TreeRegressor>(5); });
        add("bagged_cart", [](std::uint64_t s) { return std::make_unique<BaggedTreeRegressor>(20, 2, s); });
    }
    return pool;
}

double loo_knn_regress(const DistanceMatrix& dm, std::span<const double> responses, std::size_t i, std::size_t k)
{
    if (responses.size() != dm.size()) {
        throw ParameterError("loo_knn_regress: response count does not match distance matrix");
    }
    const auto nb = knn(dm, i, k);
    double s = 0.0;
    for (auto j : nb) {
        s += responses[j];
    }
    return s / static_cast<double>(nb.size());
}

} // namespace hardness
