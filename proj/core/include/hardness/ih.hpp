// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hardness/dataset.hpp"
#include "hardness/learners.hpp"
#include "hardness/matrix.hpp"

namespace hardness {

struct CvPlan {
    std::size_t folds = 10;
    bool stratified = false;
    std::uint64_t seed = 0;
    std::vector<std::size_t> fold_of; // per instance

    std::vector<std::size_t> test_indices(std::size_t fold) const;
    std::vector<std::size_t> train_indices(std::size_t fold) const;
};

// Shuffles instances with the seeded generator (per class when stratified,
// i.e. for classification) and deals them round-robin into folds. When a
// class is smaller than `folds`, the fold count drops to that class size
// (never below 2) with a warning. Throws ParameterError when folds < 2 or
// n < folds.
CvPlan make_cv_plan(const Dataset& ds, std::size_t folds, std::uint64_t seed);

struct IhResult {
    TaskKind kind = TaskKind::classification;
    std::vector<double> ih;
    std::vector<std::string> learners;
    // Classification: oof_probability[j] is an n x C matrix of learner j's
    // held-out class probabilities. Regression: oof_prediction[j][i] is the
    // held-out raw-scale prediction.
    std::vector<Matrix> oof_probability;
    std::vector<std::vector<double>> oof_prediction;
    double gamma = 0.0; // regression only
    std::size_t folds = 0;
    std::uint64_t plan_seed = 0;
    std::uint64_t pool_seed = 0;

    // Per learner: probability given to the true label (classification) or
    // the prediction (regression), instance by instance.
    std::vector<double> learner_column(std::size_t learner, const Dataset& ds) const;
};

// 1 - mean_j p_j(y_i | x_i), from each learner's held-out probabilities.
std::vector<double> ih_from_probabilities(std::span<const Matrix> oof_probability, const Labels& labels);

// 1 - mean_j exp(-(y_i - yhat_ji)^2 / gamma).
std::vector<double> ih_from_predictions(std::span<const std::vector<double>> oof_prediction,
                                        std::span<const double> responses, double gamma);

// Mean of y^2; values below 1e-12 are floored there with a warning.
double gamma_signal_power(std::span<const double> responses);

// Learners see min-max scaled features. Classification uses class indices;
// regression trains on the raw response.
IhResult ih_classification(const Dataset& ds, const LearnerPool& pool, const CvPlan& plan);
IhResult ih_regression(const Dataset& ds, const LearnerPool& pool, const CvPlan& plan);
IhResult instance_hardness(const Dataset& ds, const LearnerPool& pool, const CvPlan& plan);

} // namespace hardness
