// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "hardness/matrix.hpp"
#include "hardness/scaling.hpp"

namespace hardness {

// Least-squares fit with an intercept. coefficients[0] is the intercept,
// coefficients[1 + c] the slope of feature c.
struct OlsFit {
    std::vector<double> coefficients;
    std::vector<double> fitted;
    std::vector<double> residuals;

    double intercept() const noexcept { return coefficients.front(); }
    double predict(std::span<const double> x) const noexcept;
};

// Normal equations on centred data. A Gram matrix that is singular (or
// numerically so) gets 1e-10 added to its diagonal. Throws ValidationError
// when n <= m + 1.
OlsFit fit_ols(const Matrix& x, std::span<const double> y);
OlsFit fit_ols(const ScaledView& view, std::span<const double> responses);

// Ridge regression with an unpenalised intercept. No sample-size
// precondition.
OlsFit fit_ridge(const Matrix& x, std::span<const double> y, double lambda);

// Residuals of y regressed on a single column (fit_ols with m = 1).
std::vector<double> simple_linear_fit(std::span<const double> feature, std::span<const double> y);

} // namespace hardness
