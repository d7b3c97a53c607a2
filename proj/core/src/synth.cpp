// SPDX-License-Identifier: Apache-2.0

#include "hardness/synth.hpp"

#include <cmath>
#include <numbers>

#include "hardness/csv.hpp"
#include "hardness/errors.hpp"
#include "hardness/rng.hpp"

namespace hardness {

namespace {

std::vector<double> decimal_steps(int count)
{
    std::vector<double> out;
    for (int i = 1; i <= count; ++i) {
        out.push_back(static_cast<double>(i) / 10.0);
    }
    return out;
}

} // namespace

SweepSpec SweepSpec::default_classification()
{
    SweepSpec s;
    s.kind = TaskKind::classification;
    s.parameters = decimal_steps(20);
    return s;
}

SweepSpec SweepSpec::default_regression()
{
    SweepSpec s;
    s.kind = TaskKind::regression;
    s.parameters = decimal_steps(10);
    return s;
}

void SweepSpec::validate() const
{
    if (n < 10) {
        throw ParameterError("sweep: n must be at least 10");
    }
    if (parameters.empty()) {
        throw ParameterError("sweep: empty parameter list");
    }
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        if (!(parameters[i] > 0.0)) {
            throw ParameterError("sweep: parameters must be strictly positive");
        }
        if (i > 0 && !(parameters[i] > parameters[i - 1])) {
            throw ParameterError("sweep: parameters must be strictly ascending");
        }
    }
    if (kind == TaskKind::classification && n_classes < 2) {
        throw ParameterError("sweep: need at least 2 classes");
    }
}

Dataset gen_gaussians(std::size_t n, double sd, std::size_t n_classes, std::uint64_t seed, double radius)
{
    if (!(sd > 0.0)) {
        throw ParameterError("gen_gaussians: sd must be positive");
    }
    if (n_classes < 2 || n < 2 * n_classes) {
        throw ParameterError("gen_gaussians: need at least 2 classes with 2 points each");
    }
    SplitMix64 rng(seed);
    NormalSampler normal;
    Matrix x(n, 2);
    std::vector<std::string> labels;
    labels.reserve(n);
    std::size_t row = 0;
    for (std::size_t c = 0; c < n_classes; ++c) {
        const double angle = std::numbers::pi / 4.0 + 2.0 * std::numbers::pi * static_cast<double>(c) /
                                                          static_cast<double>(n_classes);
        const double cx = radius * std::cos(angle);
        const double cy = radius * std::sin(angle);
        const std::size_t count = n / n_classes + (c < n % n_classes ? 1 : 0);
        for (std::size_t k = 0; k < count; ++k, ++row) {
            x(row, 0) = cx + sd * normal(rng);
            x(row, 1) = cy + sd * normal(rng);
            labels.push_back("c" + std::to_string(c));
        }
    }
    return Dataset(sweep_dataset_name(TaskKind::classification, sd), {"x0", "x1"}, std::move(x), "class",
                   Labels::from_strings(labels));
}

Dataset gen_linear(std::size_t n, double sigma, std::uint64_t seed, double slope, double intercept)
{
    if (!(sigma >= 0.0)) {
        throw ParameterError("gen_linear: sigma must be non-negative");
    }
    SplitMix64 rng(seed);
    NormalSampler normal;
    Matrix x(n, 1);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x(i, 0) = rng.uniform();
        y[i] = slope * x(i, 0) + intercept + sigma * normal(rng);
    }
    return Dataset(sweep_dataset_name(TaskKind::regression, sigma), {"x0"}, std::move(x), "y", std::move(y));
}

std::string sweep_dataset_name(TaskKind kind, double parameter)
{
    const std::string value = csv::format_real(parameter, 6);
    return kind == TaskKind::classification ? "gaussians_sd" + value : "linear_sigma" + value;
}

std::vector<SweepMember> gen_sweep(const SweepSpec& spec)
{
    spec.validate();
    std::vector<SweepMember> out;
    out.reserve(spec.parameters.size());
    for (std::size_t k = 0; k < spec.parameters.size(); ++k) {
        const double p = spec.parameters[k];
        const std::uint64_t seed = spec.base_seed + k;
        if (spec.kind == TaskKind::classification) {
            out.push_back({gen_gaussians(spec.n, p, spec.n_classes, seed, spec.radius), p, seed});
        } else {
            out.push_back({gen_linear(spec.n, p, seed, spec.slope, spec.intercept), p, seed});
        }
    }
    return out;
}

} // namespace hardness
