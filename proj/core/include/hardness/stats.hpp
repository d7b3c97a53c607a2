// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

namespace hardness {

// Linear interpolation between order statistics at position q*(N-1)
// (the "type 7" convention). Throws ParameterError on empty input or q
// outside [0, 1].
double linear_quantile(std::vector<double> values, double q);
double median(std::vector<double> values);
double mean(std::span<const double> values);

// 1-based ranks; tied values share the average of their positions.
std::vector<double> average_ranks(std::span<const double> values);

double pearson(std::span<const double> a, std::span<const double> b);

// Pearson correlation of average ranks; 0 when either input is constant.
// Throws ParameterError on length mismatch or fewer than 2 values.
double spearman(std::span<const double> a, std::span<const double> b);

struct FiveNumberSummary {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
    double mean = 0.0;
};

FiveNumberSummary summarize(std::span<const double> values);

} // namespace hardness
