// SPDX-License-Identifier: Apache-2.0

#include "hardness/rng.hpp"

#include <cmath>

namespace hardness {

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept
{
    if (bound <= 1) {
        return 0;
    }
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x = 0;
    do {
        x = (*this)();
    } while (x >= limit);
    return x % bound;
}

double NormalSampler::operator()(SplitMix64& rng) noexcept
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u = 0;
    double v = 0;
    double s = 0;
    do {
        u = 2.0 * rng.uniform() - 1.0;
        v = 2.0 * rng.uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

} // namespace hardness
