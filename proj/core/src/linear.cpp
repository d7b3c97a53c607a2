// SPDX-License-Identifier: Apache-2.0

#include "hardness/linear.hpp"

#include <Eigen/Dense>

#include "hardness/errors.hpp"

namespace hardness {

namespace {

constexpr double singular_jitter = 1e-10;

OlsFit solve_centered(const Matrix& x, std::span<const double> y, double lambda)
{
    const auto n = static_cast<Eigen::Index>(x.rows());
    const auto m = static_cast<Eigen::Index>(x.cols());
    if (n == 0) {
        throw ParameterError("linear fit: empty sample");
    }
    if (static_cast<std::size_t>(n) != y.size()) {
        throw ParameterError("linear fit: response count does not match rows");
    }

    Eigen::MatrixXd xc(n, m);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < m; ++c) {
            xc(r, c) = x(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    Eigen::VectorXd yc = Eigen::Map<const Eigen::VectorXd>(y.data(), n);
    const Eigen::RowVectorXd x_mean = xc.colwise().mean();
    const double y_mean = yc.mean();
    xc.rowwise() -= x_mean;
    yc.array() -= y_mean;

    Eigen::MatrixXd gram = xc.transpose() * xc;
    gram.diagonal().array() += lambda;
    const Eigen::VectorXd rhs = xc.transpose() * yc;

    Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
    bool singular = ldlt.info() != Eigen::Success || !ldlt.isPositive();
    if (!singular && m > 0) {
        const auto d = ldlt.vectorD().cwiseAbs();
        singular = d.minCoeff() <= 1e-12 * std::max(1.0, d.maxCoeff());
    }
    if (singular) {
        gram.diagonal().array() += singular_jitter;
        ldlt.compute(gram);
    }
    const Eigen::VectorXd beta = m > 0 ? Eigen::VectorXd(ldlt.solve(rhs)) : Eigen::VectorXd();

    OlsFit fit;
    fit.coefficients.resize(static_cast<std::size_t>(m) + 1);
    fit.coefficients[0] = y_mean - (m > 0 ? x_mean.dot(beta) : 0.0);
    for (Eigen::Index c = 0; c < m; ++c) {
        fit.coefficients[static_cast<std::size_t>(c) + 1] = beta(c);
    }
    fit.fitted.resize(static_cast<std::size_t>(n));
    fit.residuals.resize(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) {
        fit.fitted[r] = fit.predict(x.row(r));
        fit.residuals[r] = y[r] - fit.fitted[r];
    }
    return fit;
}

} // namespace

double OlsFit::predict(std::span<const double> x) const noexcept
{
    double v = coefficients[0];
    for (std::size_t c = 0; c < x.size(); ++c) {
        v += coefficients[c + 1] * x[c];
    }
    return v;
}

OlsFit fit_ols(const Matrix& x, std::span<const double> y)
{
    if (x.rows() <= x.cols() + 1) {
        throw ValidationError("fit_ols: underdetermined system (n=" + std::to_string(x.rows()) +
                              ", m=" + std::to_string(x.cols()) + "); need n > m + 1");
    }
    return solve_centered(x, y, 0.0);
}

OlsFit fit_ols(const ScaledView& view, std::span<const double> responses)
{
    return fit_ols(view.features, responses);
}

OlsFit fit_ridge(const Matrix& x, std::span<const double> y, double lambda)
{
    if (lambda < 0.0) {
        throw ParameterError("fit_ridge: lambda must be non-negative");
    }
    return solve_centered(x, y, lambda);
}

std::vector<double> simple_linear_fit(std::span<const double> feature, std::span<const double> y)
{
    Matrix x(feature.size(), 1);
    x.set_column(0, feature);
    return fit_ols(x, y).residuals;
}

} // namespace hardness
