// SPDX-License-Identifier: Apache-2.0

#include "hardness/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hardness/errors.hpp"

namespace hardness {

double linear_quantile(std::vector<double> values, double q)
{
    if (values.empty()) {
        throw ParameterError("quantile of an empty sample");
    }
    if (!(q >= 0.0 && q <= 1.0)) {
        throw ParameterError("quantile fraction must lie in [0, 1]");
    }
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const double frac = pos - static_cast<double>(lo);
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(lo), values.end());
    const double low = values[lo];
    if (frac == 0.0 || lo + 1 >= values.size()) {
        return low;
    }
    const double high = *std::min_element(values.begin() + static_cast<std::ptrdiff_t>(lo) + 1, values.end());
    return low + frac * (high - low);
}

double median(std::vector<double> values) { return linear_quantile(std::move(values), 0.5); }

double mean(std::span<const double> values)
{
    if (values.empty()) {
        throw ParameterError("mean of an empty sample");
    }
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

std::vector<double> average_ranks(std::span<const double> values)
{
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            ranks[order[k]] = avg;
        }
        i = j + 1;
    }
    return ranks;
}

double pearson(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size()) {
        throw ParameterError("correlation: length mismatch");
    }
    if (a.size() < 2) {
        throw ParameterError("correlation: need at least 2 values");
    }
    const double ma = mean(a);
    const double mb = mean(b);
    double sab = 0;
    double saa = 0;
    double sbb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - ma;
        const double db = b[i] - mb;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if (saa == 0.0 || sbb == 0.0) {
        return 0.0;
    }
    return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

double spearman(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size()) {
        throw ParameterError("spearman: length mismatch");
    }
    if (a.size() < 2) {
        throw ParameterError("spearman: need at least 2 values");
    }
    const auto ra = average_ranks(a);
    const auto rb = average_ranks(b);
    return pearson(ra, rb);
}

FiveNumberSummary summarize(std::span<const double> values)
{
    std::vector<double> v(values.begin(), values.end());
    if (v.empty()) {
        throw ParameterError("summary of an empty sample");
    }
    std::sort(v.begin(), v.end());
    FiveNumberSummary s;
    s.min = v.front();
    s.max = v.back();
    s.q1 = linear_quantile(v, 0.25);
    s.median = linear_quantile(v, 0.5);
    s.q3 = linear_quantile(v, 0.75);
    s.mean = mean(v);
    return s;
}

} // namespace hardness
