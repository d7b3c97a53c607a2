// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hardness/errors.hpp"
#include "hardness/learners.hpp"

namespace hardness {

void GaussianNaiveBayes::fit(const Matrix& x, std::span<const int> labels, std::size_t n_classes)
{
    const std::size_t n = x.rows();
    const std::size_t m = x.cols();
    if (labels.size() != n || n == 0) {
        throw ParameterError("GaussianNaiveBayes::fit: bad training sample");
    }
    std::vector<double> counts(n_classes, 0.0);
    means_ = Matrix(n_classes, m);
    variances_ = Matrix(n_classes, m);
    for (std::size_t r = 0; r < n; ++r) {
        const auto c = static_cast<std::size_t>(labels[r]);
        counts[c] += 1.0;
        for (std::size_t f = 0; f < m; ++f) {
            means_(c, f) += x(r, f);
        }
    }
    for (std::size_t c = 0; c < n_classes; ++c) {
        for (std::size_t f = 0; f < m && counts[c] > 0; ++f) {
            means_(c, f) /= counts[c];
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        const auto c = static_cast<std::size_t>(labels[r]);
        for (std::size_t f = 0; f < m; ++f) {
            const double d = x(r, f) - means_(c, f);
            variances_(c, f) += d * d;
        }
    }
    log_prior_.assign(n_classes, 0.0);
    present_.assign(n_classes, false);
    const double denom = static_cast<double>(n + n_classes);
    for (std::size_t c = 0; c < n_classes; ++c) {
        present_[c] = counts[c] > 0;
        log_prior_[c] = std::log((counts[c] + 1.0) / denom);
        for (std::size_t f = 0; f < m; ++f) {
            const double v = counts[c] > 0 ? variances_(c, f) / counts[c] : 0.0;
            variances_(c, f) = std::max(v, variance_floor);
        }
    }
}

std::vector<double> GaussianNaiveBayes::predict_proba(std::span<const double> x) const
{
    const std::size_t n_classes = log_prior_.size();
    std::vector<double> logp(n_classes, -std::numeric_limits<double>::infinity());
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < n_classes; ++c) {
        if (!present_[c]) {
            continue;
        }
        double lp = log_prior_[c];
        for (std::size_t f = 0; f < x.size(); ++f) {
            const double var = variances_(c, f);
            const double d = x[f] - means_(c, f);
            lp += -0.5 * std::log(2.0 * std::numbers::pi * var) - d * d / (2.0 * var);
        }
        logp[c] = lp;
        best = std::max(best, lp);
    }
    std::vector<double> p(n_classes, 0.0);
    double total = 0.0;
    for (std::size_t c = 0; c < n_classes; ++c) {
        if (present_[c]) {
            p[c] = std::exp(logp[c] - best);
            total += p[c];
        }
    }
    for (auto& v : p) {
        v /= total;
    }
    return p;
}

Matrix class_likelihood_matrix(const ScaledView& view)
{
    const auto& labels = view.class_labels();
    if (labels.class_count() < 2) {
        throw ValidationError("class likelihoods need at least 2 classes");
    }
    GaussianNaiveBayes nb;
    nb.fit(view.features, labels.index, labels.class_count());
    Matrix out(view.size(), labels.class_count());
    for (std::size_t i = 0; i < view.size(); ++i) {
        const auto p = nb.predict_proba(view.features.row(i));
        std::copy(p.begin(), p.end(), out.row(i).begin());
    }
    return out;
}

std::vector<double> class_likelihoods(const ScaledView& view, std::size_t i)
{
    const auto& labels = view.class_labels();
    if (labels.class_count() < 2) {
        throw ValidationError("class likelihoods need at least 2 classes");
    }
    GaussianNaiveBayes nb;
    nb.fit(view.features, labels.index, labels.class_count());
    return nb.predict_proba(view.features.row(i));
}

} // namespace hardness
