// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "hardness/diagnostics.hpp"
#include "hardness/errors.hpp"
#include "hardness/hm_class.hpp"
#include "hardness/profile.hpp"
#include "oracles.hpp"

using namespace hardness;

namespace {

void require_column(const HardnessProfile& p, const std::string& measure, const std::vector<double>& expect)
{
    const auto& got = p.column(measure);
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        INFO(measure << " instance " << i);
        REQUIRE(std::abs(got[i] - expect[i]) <= 1e-12);
    }
}

} // namespace

TEST_CASE("fix_c6 reference values")
{
    const auto p = classification_profile(testing::fix_c6());
    CHECK(p.measures() == classification_measures());
    const std::size_t A = 0;
    const std::size_t B = 1;

    CHECK(p.value(A, "kDN") == doctest::Approx(0.6));
    CHECK(p.value(A, "N1") == 0.0);
    CHECK(p.value(B, "N1") == doctest::Approx(0.5));
    CHECK(p.value(A, "N2") == doctest::Approx(1.0 / (1.0 + std::sqrt(200.0))));
    CHECK(p.value(A, "LSC") == 0.0);
    CHECK(p.value(A, "LSR") == 0.0);
    CHECK(p.value(A, "U") == doctest::Approx(0.6));
    CHECK(p.value(A, "De") == doctest::Approx(0.6));
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(p.value(i, "CB") == doctest::Approx(0.5));
        CHECK(p.value(i, "F1") == 0.0);
        CHECK(p.value(i, "TD") == doctest::Approx(1.0));
        CHECK(p.value(i, "DCP") == doctest::Approx(0.5));
        CHECK(p.value(i, "CLD") < 1e-6);
    }
}

TEST_CASE("kDN with k = 2 on fix_c6")
{
    ClassificationOptions opts;
    opts.k = 2;
    const std::vector<std::string> only{"kDN"};
    const auto p = classification_profile(testing::fix_c6(), opts, only);
    CHECK(p.measures() == only);
    CHECK(p.value(0, "kDN") == 0.0);
}

TEST_CASE("k larger than n - 1 is clamped")
{
    ClassificationOptions opts;
    opts.k = 50;
    const std::vector<std::string> only{"kDN"};
    const auto p = classification_profile(testing::fix_c6(), opts, only);
    CHECK(p.value(0, "kDN") == doctest::Approx(0.6));
}

TEST_CASE("neighbourhood measures match brute-force oracles")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 8 + (seed * 7) % 50;
        const std::size_t m = 1 + seed % 4;
        const std::size_t classes = 2 + seed % 3;
        const auto ds = testing::random_classification(seed, n, m, classes);
        const auto p = classification_profile(ds);
        const auto d = oracle::distances(oracle::scaled_rows(ds));
        const auto& y = ds.labels().index;
        require_column(p, "kDN", oracle::kdn(d, y, 5));
        require_column(p, "N1", oracle::n1(d, y));
        require_column(p, "N2", oracle::n2(d, y));
        require_column(p, "LSC", oracle::lsc(d, y));
        require_column(p, "LSR", oracle::lsr(d, y));
        require_column(p, "U", oracle::usefulness(d, y));
        require_column(p, "De", oracle::density(d, y, 0.15, true));
    }
}

TEST_CASE("class balance and feature overlap by direct counting")
{
    const auto ds = testing::random_classification(77, 40, 3, 3);
    const auto p = classification_profile(ds);
    const auto rows = oracle::scaled_rows(ds);
    const auto& y = ds.labels().index;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const double own = static_cast<double>(oracle::class_size(y, y[i]));
        REQUIRE(p.value(i, "CB") == doctest::Approx(1.0 - own / 40.0));

        double overlapped = 0;
        for (std::size_t f = 0; f < 3; ++f) {
            bool hit = false;
            for (int c = 0; c < 3; ++c) {
                if (c == y[i]) {
                    continue;
                }
                double lo_own = INFINITY, hi_own = -INFINITY, lo_c = INFINITY, hi_c = -INFINITY;
                for (std::size_t j = 0; j < ds.size(); ++j) {
                    if (y[j] == y[i]) {
                        lo_own = std::min(lo_own, rows[j][f]);
                        hi_own = std::max(hi_own, rows[j][f]);
                    } else if (y[j] == c) {
                        lo_c = std::min(lo_c, rows[j][f]);
                        hi_c = std::max(hi_c, rows[j][f]);
                    }
                }
                const double v = rows[i][f];
                hit = hit || (v >= std::max(lo_own, lo_c) && v <= std::min(hi_own, hi_c));
            }
            overlapped += hit ? 1 : 0;
        }
        REQUIRE(p.value(i, "F1") == doctest::Approx(overlapped / 3.0));
    }
}

TEST_CASE("class likelihood difference")
{
    CHECK(cld(std::vector<double>{1.0, 0.0}, 0) == 0.0);
    CHECK(cld(std::vector<double>{0.0, 1.0}, 0) == 1.0);
    CHECK(cld(std::vector<double>{0.5, 0.5}, 1) == doctest::Approx(0.5));
    CHECK(cld(std::vector<double>{0.2, 0.5, 0.3}, 2) == doctest::Approx(0.6));
}

TEST_CASE("every value lies in [0, 1]")
{
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const auto p = classification_profile(testing::random_classification(seed, 60, 3, 3));
        for (const auto& m : p.measures()) {
            for (double v : p.column(m)) {
                REQUIRE(v >= 0.0);
                REQUIRE(v <= 1.0);
            }
        }
    }
}

TEST_CASE("singleton class warns and scores 1")
{
    const auto ds = Dataset::classification("single", Matrix::from_rows({{0}, {1}, {2}, {3}, {9}}),
                                            std::vector<std::string>{"a", "a", "a", "a", "b"});
    ScopedWarningCapture capture;
    const auto p = classification_profile(ds);
    CHECK(capture.contains("single instance"));
    CHECK(p.value(4, "N2") == 1.0);
    CHECK(p.value(4, "LSC") == 1.0);
    CHECK(p.value(4, "LSR") == 1.0);
}

TEST_CASE("too few instances or wrong kind")
{
    const auto tiny = Dataset::classification("tiny", Matrix::from_rows({{0}, {1}, {2}}),
                                              std::vector<std::string>{"a", "b", "a"});
    CHECK_THROWS_AS(classification_profile(tiny), ValidationError);
    CHECK_THROWS_AS(classification_profile(testing::fix_r4()), ValidationError);
}

TEST_CASE("measure list parsing")
{
    CHECK(parse_measure_list("N1,kDN", TaskKind::classification) == std::vector<std::string>{"kDN", "N1"});
    CHECK_THROWS_AS(parse_measure_list("kDN,bogus", TaskKind::classification), ParameterError);
    CHECK_THROWS_AS(parse_measure_list("LE", TaskKind::classification), ParameterError);
}

TEST_CASE("measure subset equals the corresponding full-profile columns")
{
    const auto ds = testing::random_classification(21, 50, 2);
    const auto full = classification_profile(ds);
    const std::vector<std::string> subset{"N1", "U"};
    const auto part = classification_profile(ds, {}, subset);
    CHECK(part.measures() == subset);
    CHECK(part.column("N1") == full.column("N1"));
    CHECK(part.column("U") == full.column("U"));
    CHECK_FALSE(part.has("kDN"));
}

TEST_CASE("profile csv layout")
{
    const auto p = classification_profile(testing::fix_c6());
    std::ostringstream out;
    write_profile_csv(p, out);
    const auto text = out.str();
    CHECK(text.rfind("instance_id,kDN,DCP,TD,CLD,CB,F1,N1,N2,LSC,LSR,U,De\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);

    std::istringstream in(text);
    const auto table = read_instance_table(in, "profile");
    CHECK(table.rows() == 6);
    REQUIRE(table.find("U") != nullptr);
    CHECK((*table.find("U"))[0] == doctest::Approx(0.6));
}
