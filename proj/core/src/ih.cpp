// SPDX-License-Identifier: Apache-2.0

#include "hardness/ih.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hardness/diagnostics.hpp"
#include "hardness/errors.hpp"
#include "hardness/parallel.hpp"
#include "hardness/rng.hpp"
#include "hardness/scaling.hpp"

namespace hardness {

namespace {

constexpr double gamma_floor = 1e-12;

// Fisher-Yates driven by SplitMix64, so the permutation is fixed by the key.
void shuffle(std::vector<std::size_t>& v, SplitMix64& rng)
{
    for (std::size_t i = v.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace

std::vector<std::size_t> CvPlan::test_indices(std::size_t fold) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < fold_of.size(); ++i) {
        if (fold_of[i] == fold) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> CvPlan::train_indices(std::size_t fold) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < fold_of.size(); ++i) {
        if (fold_of[i] != fold) {
            out.push_back(i);
        }
    }
    return out;
}

CvPlan make_cv_plan(const Dataset& ds, std::size_t folds, std::uint64_t seed)
{
    if (folds < 2) {
        throw ParameterError("make_cv_plan: need at least 2 folds");
    }
    const std::size_t n = ds.size();
    if (n < folds) {
        throw ParameterError("make_cv_plan: " + std::to_string(n) + " instances cannot fill " + std::to_string(folds) +
                             " folds");
    }
    CvPlan plan;
    plan.seed = seed;
    plan.stratified = ds.kind() == TaskKind::classification;
    plan.fold_of.assign(n, 0);
    SplitMix64 rng(derive_seed(seed, 0));

    std::vector<std::vector<std::size_t>> groups;
    if (plan.stratified) {
        const auto& labels = ds.labels();
        groups.assign(labels.class_count(), {});
        for (std::size_t i = 0; i < n; ++i) {
            groups[static_cast<std::size_t>(labels.index[i])].push_back(i);
        }
        std::size_t smallest = n;
        std::size_t smallest_class = 0;
        for (std::size_t c = 0; c < groups.size(); ++c) {
            if (groups[c].size() < smallest) {
                smallest = groups[c].size();
                smallest_class = c;
            }
        }
        if (smallest < folds) {
            const std::size_t reduced = std::max<std::size_t>(2, smallest);
            warn("dataset '" + ds.name() + "': class '" + labels.names[smallest_class] + "' has " +
                 std::to_string(smallest) + " members; reducing folds from " + std::to_string(folds) + " to " +
                 std::to_string(reduced));
            folds = reduced;
        }
    } else {
        groups.emplace_back(n);
        std::iota(groups[0].begin(), groups[0].end(), std::size_t{0});
    }
    plan.folds = folds;

    std::size_t next = 0;
    for (auto& group : groups) {
        shuffle(group, rng);
        for (auto i : group) {
            plan.fold_of[i] = next;
            next = (next + 1) % folds;
        }
    }
    return plan;
}

std::vector<double> IhResult::learner_column(std::size_t learner, const Dataset& ds) const
{
    if (kind == TaskKind::regression) {
        return oof_prediction[learner];
    }
    const auto& labels = ds.labels();
    std::vector<double> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out[i] = oof_probability[learner](i, static_cast<std::size_t>(labels.index[i]));
    }
    return out;
}

std::vector<double> ih_from_probabilities(std::span<const Matrix> oof_probability, const Labels& labels)
{
    if (oof_probability.empty()) {
        throw ParameterError("instance hardness: the learner pool is empty");
    }
    std::vector<double> ih(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        double sum = 0.0;
        for (const auto& p : oof_probability) {
            sum += p(i, static_cast<std::size_t>(labels.index[i]));
        }
        ih[i] = std::clamp(1.0 - sum / static_cast<double>(oof_probability.size()), 0.0, 1.0);
    }
    return ih;
}

std::vector<double> ih_from_predictions(std::span<const std::vector<double>> oof_prediction,
                                        std::span<const double> responses, double gamma)
{
    if (oof_prediction.empty()) {
        throw ParameterError("instance hardness: the learner pool is empty");
    }
    if (!(gamma > 0.0)) {
        throw ParameterError("instance hardness: gamma must be positive");
    }
    std::vector<double> ih(responses.size());
    for (std::size_t i = 0; i < responses.size(); ++i) {
        double sum = 0.0;
        for (const auto& pred : oof_prediction) {
            const double err = responses[i] - pred[i];
            sum += std::exp(-(err * err) / gamma);
        }
        ih[i] = std::clamp(1.0 - sum / static_cast<double>(oof_prediction.size()), 0.0, 1.0);
    }
    return ih;
}

double gamma_signal_power(std::span<const double> responses)
{
    if (responses.empty()) {
        throw ParameterError("gamma_signal_power: empty response vector");
    }
    double sum = 0.0;
    for (double y : responses) {
        sum += y * y;
    }
    const double gamma = sum / static_cast<double>(responses.size());
    if (gamma < gamma_floor) {
        warn("signal power " + std::to_string(gamma) + " is below 1e-12; flooring gamma at 1e-12");
        return gamma_floor;
    }
    return gamma;
}

IhResult ih_classification(const Dataset& ds, const LearnerPool& pool, const CvPlan& plan)
{
    if (pool.learners.empty()) {
        throw ParameterError("ih_classification: the learner pool is empty");
    }
    if (plan.fold_of.size() != ds.size()) {
        throw ParameterError("ih_classification: CV plan does not match the dataset");
    }
    const auto& labels = ds.labels();
    const std::size_t classes = labels.class_count();
    const ScaledView view = scale(ds);

    IhResult result;
    result.kind = TaskKind::classification;
    result.learners = pool.names();
    result.folds = plan.folds;
    result.plan_seed = plan.seed;
    result.pool_seed = pool.seed;
    result.oof_probability.assign(pool.size(), Matrix(ds.size(), classes));

    const std::size_t jobs = pool.size() * plan.folds;
    parallel_for(jobs, [&](std::size_t job) {
        const std::size_t j = job / plan.folds;
        const std::size_t fold = job % plan.folds;
        const auto train = plan.train_indices(fold);
        const auto test = plan.test_indices(fold);
        if (test.empty()) {
            return;
        }
        const Matrix x_train = view.features.select_rows(train);
        std::vector<int> y_train(train.size());
        for (std::size_t r = 0; r < train.size(); ++r) {
            y_train[r] = labels.index[train[r]];
        }
        auto model = pool.learners[j].make_classifier(pool.job_seed(j, fold));
        model->fit(x_train, y_train, classes);
        for (auto i : test) {
            const auto p = model->predict_proba(view.features.row(i));
            std::copy(p.begin(), p.end(), result.oof_probability[j].row(i).begin());
        }
    });
    result.ih = ih_from_probabilities(result.oof_probability, labels);
    return result;
}

IhResult ih_regression(const Dataset& ds, const LearnerPool& pool, const CvPlan& plan)
{
    if (pool.learners.empty()) {
        throw ParameterError("ih_regression: the learner pool is empty");
    }
    if (plan.fold_of.size() != ds.size()) {
        throw ParameterError("ih_regression: CV plan does not match the dataset");
    }
    const auto& y = ds.responses();
    const ScaledView view = scale(ds);

    IhResult result;
    result.kind = TaskKind::regression;
    result.learners = pool.names();
    result.folds = plan.folds;
    result.plan_seed = plan.seed;
    result.pool_seed = pool.seed;
    result.gamma = gamma_signal_power(y);
    result.oof_prediction.assign(pool.size(), std::vector<double>(ds.size(), 0.0));

    const std::size_t jobs = pool.size() * plan.folds;
    parallel_for(jobs, [&](std::size_t job) {
        const std::size_t j = job / plan.folds;
        const std::size_t fold = job % plan.folds;
        const auto train = plan.train_indices(fold);
        const auto test = plan.test_indices(fold);
        if (test.empty()) {
            return;
        }
        const Matrix x_train = view.features.select_rows(train);
        std::vector<double> y_train(train.size());
        for (std::size_t r = 0; r < train.size(); ++r) {
            y_train[r] = y[train[r]];
        }
        auto model = pool.learners[j].make_regressor(pool.job_seed(j, fold));
        model->fit(x_train, y_train);
        for (auto i : test) {
            result.oof_prediction[j][i] = model->predict(view.features.row(i));
        }
    });
    result.ih = ih_from_predictions(result.oof_prediction, y, result.gamma);
    return result;
}

IhResult instance_hardness(const Dataset& ds, const LearnerPool& pool, const CvPlan& plan)
{
    if (pool.kind != ds.kind()) {
        throw ParameterError("instance_hardness: pool kind does not match dataset kind");
    }
    return ds.kind() == TaskKind::classification ? ih_classification(ds, pool, plan) : ih_regression(ds, pool, plan);
}

} // namespace hardness
