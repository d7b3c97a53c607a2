// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numeric>

#include "doctest.h"
#include "hardness/errors.hpp"
#include "hardness/hm_class.hpp"
#include "hardness/hm_reg.hpp"
#include "hardness/synth.hpp"

using namespace hardness;

TEST_CASE("two-class gaussians: sizes, names and centres")
{
    const double sd = 0.3;
    const std::size_t n = 500;
    const auto ds = gen_gaussians(n, sd, 2, 17);
    CHECK(ds.size() == 500);
    CHECK(ds.dims() == 2);
    CHECK(ds.labels().counts() == std::vector<std::size_t>{250, 250});
    CHECK(ds.labels().names == std::vector<std::string>{"c0", "c1"});
    CHECK(ds.feature_names() == std::vector<std::string>{"x0", "x1"});

    // Centres at (1, 1) and (-1, -1): radius sqrt(2), first one at 45 degrees.
    const double centre[2][2] = {{1.0, 1.0}, {-1.0, -1.0}};
    for (std::size_t c = 0; c < 2; ++c) {
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (static_cast<std::size_t>(ds.labels().index[i]) == c) {
                mx += ds.features()(i, 0);
                my += ds.features()(i, 1);
            }
        }
        mx /= 250.0;
        my /= 250.0;
        const double tol = 3.0 * sd / std::sqrt(250.0);
        CHECK(std::abs(mx - centre[c][0]) <= tol);
        CHECK(std::abs(my - centre[c][1]) <= tol);
    }
}

TEST_CASE("uneven class split gives the remainder to the first classes")
{
    const auto ds = gen_gaussians(11, 0.5, 3, 1);
    CHECK(ds.labels().counts() == std::vector<std::size_t>{4, 4, 3});
}

TEST_CASE("vanishing sd collapses each class")
{
    const auto ds = gen_gaussians(100, 1e-6, 2, 3);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const double expect = ds.labels().index[i] == 0 ? 1.0 : -1.0;
        CHECK(std::abs(ds.features()(i, 0) - expect) < 1e-4);
    }
    const std::vector<std::string> only{"kDN"};
    const auto p = classification_profile(ds, {}, only);
    for (double v : p.column("kDN")) {
        CHECK(v == 0.0);
    }
}

TEST_CASE("generators are deterministic per seed")
{
    CHECK(gen_gaussians(50, 0.4, 2, 5).features() == gen_gaussians(50, 0.4, 2, 5).features());
    CHECK_FALSE(gen_gaussians(50, 0.4, 2, 5).features() == gen_gaussians(50, 0.4, 2, 6).features());
    CHECK(gen_linear(50, 0.4, 5).responses() == gen_linear(50, 0.4, 5).responses());
}

TEST_CASE("noisy line residual spread")
{
    const auto ds = gen_linear(500, 0.5, 42);
    double ss = 0.0;
    double mean = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const double x = ds.features()(i, 0);
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        mean += ds.responses()[i] - x;
    }
    mean /= 500.0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const double r = ds.responses()[i] - ds.features()(i, 0) - mean;
        ss += r * r;
    }
    CHECK(std::abs(std::sqrt(ss / 499.0) - 0.5) <= 0.05);
}

TEST_CASE("zero noise gives a perfect line")
{
    const auto ds = gen_linear(50, 0.0, 1, 2.0, -1.0);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        CHECK(ds.responses()[i] == doctest::Approx(2.0 * ds.features()(i, 0) - 1.0));
    }
    const std::vector<std::string> only{"LE"};
    const auto profile = regression_profile(ds, {}, only);
    for (double v : profile.column("LE")) {
        CHECK(v < 1e-9);
    }
}

TEST_CASE("default sweeps")
{
    const auto cls = SweepSpec::default_classification();
    REQUIRE(cls.parameters.size() == 20);
    CHECK(cls.parameters.front() == 0.1);
    CHECK(cls.parameters.back() == 2.0);
    CHECK(cls.parameters[2] == 0.3);
    CHECK(cls.n == 500);
    const auto reg = SweepSpec::default_regression();
    REQUIRE(reg.parameters.size() == 10);
    CHECK(reg.parameters.back() == 1.0);
}

TEST_CASE("sweep members carry parameter, seed and name")
{
    SweepSpec spec;
    spec.n = 40;
    spec.parameters = {0.2, 0.7};
    spec.base_seed = 10;
    const auto sweep = gen_sweep(spec);
    REQUIRE(sweep.size() == 2);
    CHECK(sweep[1].seed == 11);
    CHECK(sweep[1].parameter == 0.7);
    CHECK(sweep[0].dataset.name() == "gaussians_sd0.2");
    CHECK(sweep_dataset_name(TaskKind::regression, 0.5) == "linear_sigma0.5");

    spec.parameters = {0.3};
    CHECK(gen_sweep(spec).size() == 1);
}

TEST_CASE("invalid sweep specs")
{
    SweepSpec spec;
    spec.parameters = {0.5, 0.2};
    CHECK_THROWS_AS(spec.validate(), ParameterError);
    spec.parameters = {0.0, 0.2};
    CHECK_THROWS_AS(spec.validate(), ParameterError);
    spec.parameters = {0.1};
    spec.n = 5;
    CHECK_THROWS_AS(spec.validate(), ParameterError);
}
