// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hardness/dataset.hpp"

namespace hardness::testing {

// Two tight 3-point clusters: c0 = {A(0,0), B(0,1), C(1,0)},
// c1 = {D(10,10), E(10,11), F(11,10)}. Both columns span [0, 11], so scaling
// divides every distance by 11.
inline Dataset fix_c6()
{
    Matrix x = Matrix::from_rows({{0, 0}, {0, 1}, {1, 0}, {10, 10}, {10, 11}, {11, 10}});
    std::vector<std::string> y = {"c0", "c0", "c0", "c1", "c1", "c1"};
    return Dataset::classification("fix_c6", std::move(x), y);
}

// x = y = (0, 1, 2, 3); scaled both become (0, 1/3, 2/3, 1).
inline Dataset fix_r4()
{
    Matrix x = Matrix::from_rows({{0}, {1}, {2}, {3}});
    return Dataset::regression("fix_r4", std::move(x), {0, 1, 2, 3});
}

// Continuous random data (ties have probability zero). Uses std::mt19937_64
// so fixtures do not depend on the library generator.
inline Dataset random_classification(std::uint64_t seed, std::size_t n, std::size_t m, std::size_t classes = 2)
{
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    Matrix x(n, m);
    std::vector<std::string> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t c = i < classes * 2 ? i % classes : gen() % classes;
        y[i] = "k" + std::to_string(c);
        for (std::size_t f = 0; f < m; ++f) {
            x(i, f) = noise(gen) + 0.8 * static_cast<double>(c) * static_cast<double>((f % 2) ? 1 : -1);
        }
    }
    return Dataset::classification("random_c" + std::to_string(seed), std::move(x), y);
}

inline Dataset random_regression(std::uint64_t seed, std::size_t n, std::size_t m)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> noise(0.0, 0.3);
    Matrix x(n, m);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t f = 0; f < m; ++f) {
            x(i, f) = unif(gen);
            s += (static_cast<double>(f) + 1.0) * x(i, f);
        }
        y[i] = s + noise(gen);
    }
    return Dataset::regression("random_r" + std::to_string(seed), std::move(x), std::move(y));
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::uint64_t seed)
{
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = i;
    }
    std::mt19937_64 gen(seed);
    std::shuffle(p.begin(), p.end(), gen);
    return p;
}

} // namespace hardness::testing
