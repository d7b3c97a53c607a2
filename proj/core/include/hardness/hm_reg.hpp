// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hardness/dataset.hpp"
#include "hardness/geometry.hpp"
#include "hardness/linear.hpp"
#include "hardness/profile.hpp"

namespace hardness {

struct RegressionOptions {
    std::size_t k = 5;
    std::size_t hb_bins = 10;
    std::size_t td_min_leaf = 5;
    double de_quantile = 0.15;
    double cfe_residual_threshold = 0.1;
};

struct CfeRound {
    std::size_t feature = 0;
    double correlation = 0.0;
    std::vector<std::size_t> removed;
};

struct CfeTrace {
    std::vector<CfeRound> rounds;
    // 1-based round in which each instance was removed; empty for survivors.
    std::vector<std::optional<std::size_t>> removal_round;

    std::size_t round_count() const noexcept { return rounds.size(); }
    std::size_t survivor_count() const noexcept;
    std::string to_json() const;
};

struct CfeResult {
    std::vector<double> values;
    CfeTrace trace;
};

// Collective feature efficiency. Each round takes the unused feature with the
// largest |Spearman| against the remaining responses (lowest index on ties),
// fits a line on that feature alone and drops the instances whose residual is
// within the threshold. Stops when features or instances run out; a round
// with zero correlation that removes nothing ends the loop and is not
// counted. Removed instances score (round - 1) / R, survivors 1.
CfeResult cfe(const Matrix& features, std::span<const double> responses, double residual_threshold = 0.1);

// |residual_i| of the multiple linear fit.
double le(const OlsFit& fit, std::size_t i);

// Mean |y_i - y_j| over i's MST neighbours.
double s1(const MstAdjacency& mst, std::span<const double> responses, std::size_t i);

// Instances ordered by response (ties by index); each gets the mean feature
// distance to its one or two neighbours in that order.
std::vector<double> s2_values(const DistanceMatrix& dm, std::span<const double> responses);

// Squared leave-one-out error of a k' = min(k, n-1) nearest-neighbour
// regressor.
double s3(const DistanceMatrix& dm, std::span<const double> responses, std::size_t i, std::size_t k = 5);

// Equal-width bin of a value in [0,1]; 1.0 falls in the last bin.
std::size_t hb_bin(double value, std::size_t bins);
// 1 - (instances sharing i's bin) / n, over scaled responses.
std::vector<double> hb_values(std::span<const double> responses, std::size_t bins = 10);

// CFE, LE, S1, S2, S3, HB, TD, De (or the selected subset). LE uses the raw
// response; the other measures use the min-max scaled one. Needs n >= 4.
HardnessProfile regression_profile(const Dataset& ds, const RegressionOptions& options = {},
                                   std::span<const std::string> measures = {}, CfeTrace* trace = nullptr);

} // namespace hardness
