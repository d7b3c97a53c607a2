// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hardness/dataset.hpp"

namespace hardness {

// Gaussian-overlap sweep (classification, parameter = per-class sd) or
// noisy-linear sweep (regression, parameter = noise sigma).
struct SweepSpec {
    TaskKind kind = TaskKind::classification;
    std::size_t n = 500;
    std::vector<double> parameters;
    std::uint64_t base_seed = 0;
    std::size_t n_classes = 2;
    double radius = 1.4142135623730951;
    double slope = 1.0;
    double intercept = 0.0;

    // sd = 0.1, 0.2, ..., 2.0
    static SweepSpec default_classification();
    // sigma = 0.1, 0.2, ..., 1.0
    static SweepSpec default_regression();

    // Throws ParameterError unless parameters are strictly positive and
    // ascending and n >= 10.
    void validate() const;
};

// Class c is centred at radius * (cos t, sin t) with t = pi/4 + 2*pi*c/C, so
// two classes sit at (1, 1) and (-1, -1) for the default radius. Class c gets
// floor(n/C) points, plus one for the first n mod C classes, drawn as
// centre + sd * N(0, I2). Labels are "c0", "c1", ...
Dataset gen_gaussians(std::size_t n, double sd, std::size_t n_classes, std::uint64_t seed,
                      double radius = 1.4142135623730951);

// x ~ U[0, 1), y = slope * x + intercept + sigma * N(0, 1).
Dataset gen_linear(std::size_t n, double sigma, std::uint64_t seed, double slope = 1.0, double intercept = 0.0);

struct SweepMember {
    Dataset dataset;
    double parameter = 0.0;
    std::uint64_t seed = 0;
};

// One dataset per parameter; dataset k uses seed base_seed + k.
std::vector<SweepMember> gen_sweep(const SweepSpec& spec);

// Name encoding the parameter, e.g. "gaussians_sd0.2" or "linear_sigma1".
std::string sweep_dataset_name(TaskKind kind, double parameter);

} // namespace hardness
