// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hardness/cart.hpp"
#include "hardness/dataset.hpp"
#include "hardness/geometry.hpp"
#include "hardness/linear.hpp"
#include "hardness/matrix.hpp"

namespace hardness {

class Classifier {
public:
    virtual ~Classifier() = default;
    // Labels are class indices in [0, n_classes); classes may be absent from
    // the training sample.
    virtual void fit(const Matrix& x, std::span<const int> labels, std::size_t n_classes) = 0;
    // Non-negative, sums to 1.
    virtual std::vector<double> predict_proba(std::span<const double> x) const = 0;
};

class Regressor {
public:
    virtual ~Regressor() = default;
    virtual void fit(const Matrix& x, std::span<const double> y) = 0;
    virtual double predict(std::span<const double> x) const = 0;
};

// Gaussian naive Bayes: Laplace-smoothed priors (count + 1) / (n + C), one
// normal per class and feature with variance floored at 1e-9. Classes absent
// from training get probability 0.
class GaussianNaiveBayes final : public Classifier {
public:
    static constexpr double variance_floor = 1e-9;

    void fit(const Matrix& x, std::span<const int> labels, std::size_t n_classes) override;
    std::vector<double> predict_proba(std::span<const double> x) const override;

private:
    std::vector<double> log_prior_;
    std::vector<bool> present_;
    Matrix means_;
    Matrix variances_;
};

// Majority vote over the k nearest training rows; probabilities are neighbour
// class fractions.
class KnnClassifier final : public Classifier {
public:
    explicit KnnClassifier(std::size_t k = 5) : k_(k) {}
    void fit(const Matrix& x, std::span<const int> labels, std::size_t n_classes) override;
    std::vector<double> predict_proba(std::span<const double> x) const override;

private:
    std::size_t k_;
    std::size_t n_classes_ = 0;
    Matrix x_;
    std::vector<int> labels_;
};

// Leaf class frequencies of a single CART tree.
class TreeClassifier final : public Classifier {
public:
    explicit TreeClassifier(std::size_t min_leaf = 2) : min_leaf_(min_leaf) {}
    void fit(const Matrix& x, std::span<const int> labels, std::size_t n_classes) override;
    std::vector<double> predict_proba(std::span<const double> x) const override;

private:
    std::size_t min_leaf_;
    CartTree tree_;
};

// One-vs-rest logistic regression trained by full-batch gradient descent on
// the mean log-loss from zero weights. Per-class sigmoid outputs are
// normalised to sum to 1.
class LogisticRegression final : public Classifier {
public:
    LogisticRegression(std::size_t epochs = 500, double learning_rate = 0.1)
        : epochs_(epochs), learning_rate_(learning_rate)
    {
    }
    void fit(const Matrix& x, std::span<const int> labels, std::size_t n_classes) override;
    std::vector<double> predict_proba(std::span<const double> x) const override;

private:
    std::size_t epochs_;
    double learning_rate_;
    Matrix weights_; // n_classes x (m + 1), bias last
};

// Average leaf frequencies of trees grown on bootstrap resamples.
class BaggedTreeClassifier final : public Classifier {
public:
    BaggedTreeClassifier(std::size_t trees, std::size_t min_leaf, std::uint64_t seed)
        : trees_(trees), min_leaf_(min_leaf), seed_(seed)
    {
    }
    void fit(const Matrix& x, std::span<const int> labels, std::size_t n_classes) override;
    std::vector<double> predict_proba(std::span<const double> x) const override;

private:
    std::size_t trees_;
    std::size_t min_leaf_;
    std::uint64_t seed_;
    std::size_t n_classes_ = 0;
    std::vector<CartTree> ensemble_;
};

// Least squares (lambda = 0) or ridge with an unpenalised intercept.
class LinearRegressor final : public Regressor {
public:
    explicit LinearRegressor(double lambda = 0.0) : lambda_(lambda) {}
    void fit(const Matrix& x, std::span<const double> y) override;
    double predict(std::span<const double> x) const override;

private:
    double lambda_;
    OlsFit fit_;
};

class KnnRegressor final : public Regressor {
public:
    explicit KnnRegressor(std::size_t k = 5) : k_(k) {}
    void fit(const Matrix& x, std::span<const double> y) override;
    double predict(std::span<const double> x) const override;

private:
    std::size_t k_;
    Matrix x_;
    std::vector<double> y_;
};

class TreeRegressor final : public Regressor {
public:
    explicit TreeRegressor(std::size_t min_leaf = 5) : min_leaf_(min_leaf) {}
    void fit(const Matrix& x, std::span<const double> y) override;
    double predict(std::span<const double> x) const override;

private:
    std::size_t min_leaf_;
    CartTree tree_;
};

class BaggedTreeRegressor final : public Regressor {
public:
    BaggedTreeRegressor(std::size_t trees, std::size_t min_leaf, std::uint64_t seed)
        : trees_(trees), min_leaf_(min_leaf), seed_(seed)
    {
    }
    void fit(const Matrix& x, std::span<const double> y) override;
    double predict(std::span<const double> x) const override;

private:
    std::size_t trees_;
    std::size_t min_leaf_;
    std::uint64_t seed_;
    std::vector<CartTree> ensemble_;
};

// A named learner recipe. Exactly one factory is set, matching the pool kind.
struct LearnerSpec {
    std::string name;
    std::function<std::unique_ptr<Classifier>(std::uint64_t seed)> make_classifier;
    std::function<std::unique_ptr<Regressor>(std::uint64_t seed)> make_regressor;
};

struct LearnerPool {
    TaskKind kind = TaskKind::classification;
    std::uint64_t seed = 0;
    std::vector<LearnerSpec> learners;

    std::size_t size() const noexcept { return learners.size(); }
    std::vector<std::string> names() const;
    // Seed of learner j when trained for fold f; depends only on (seed, j, f).
    std::uint64_t job_seed(std::size_t learner, std::size_t fold) const noexcept;
    // First `count` learners.
    LearnerPool truncated(std::size_t count) const;
};

// Classification: gaussian_nb, knn5, cart, logistic, bagged_cart.
// Regression: ols, ridge, knn5, cart, bagged_cart.
LearnerPool default_pool(TaskKind kind, std::uint64_t seed);

// Unweighted mean response of knn(i, k), never using y[i].
double loo_knn_regress(const DistanceMatrix& dm, std::span<const double> responses, std::size_t i, std::size_t k);

// Per-class naive Bayes posterior of instance i, fitted on the whole view.
std::vector<double> class_likelihoods(const ScaledView& view, std::size_t i);
// Row i holds class_likelihoods(view, i).
Matrix class_likelihood_matrix(const ScaledView& view);

} // namespace hardness
