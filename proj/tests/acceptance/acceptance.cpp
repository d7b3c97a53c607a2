// SPDX-License-Identifier: Apache-2.0

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "hardness/diagnostics.hpp"
#include "hardness/geometry.hpp"
#include "hardness/hm_class.hpp"
#include "hardness/hm_reg.hpp"
#include "hardness/ih.hpp"
#include "hardness/profile.hpp"
#include "hardness/scaling.hpp"
#include "hardness/stats.hpp"
#include "hardness/synth.hpp"
#include "oracles.hpp"

using namespace hardness;

namespace {

// Tolerances.
constexpr double trend_threshold = 0.9;
constexpr double s2_trend_threshold = 0.8;
constexpr double n1_easy_threshold = 0.05;
constexpr double oracle_tolerance = 1e-12;
constexpr double ih_analytic_tolerance = 1e-12;
constexpr double permutation_tolerance = 1e-12;
constexpr double permutation_tolerance_fitted = 1e-9; // LE, CLD: summation order
constexpr double sweep_seconds_limit = 180.0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const std::function<Outcome()>& check)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = check();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s %s: %s [%.1fs]\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.c_str(), secs);
    std::fflush(stdout);
    if (!out.pass) {
        ++failures;
    }
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

double median_of(const std::vector<double>& v) { return median(v); }

struct SweepResult {
    std::vector<double> parameters;
    std::vector<std::map<std::string, double>> medians; // per dataset: measure -> median
    double seconds = 0.0;
};

SweepResult run_sweep(TaskKind kind, const std::vector<double>& params)
{
    const auto start = std::chrono::steady_clock::now();
    SweepSpec spec;
    spec.kind = kind;
    spec.n = 200;
    spec.base_seed = 0;
    spec.parameters = params;
    SweepResult r;
    r.parameters = params;
    for (const auto& member : gen_sweep(spec)) {
        const auto& ds = member.dataset;
        const auto profile = kind == TaskKind::classification ? classification_profile(ds) : regression_profile(ds);
        const auto ih = instance_hardness(ds, default_pool(kind, 0), make_cv_plan(ds, 10, 0));
        std::map<std::string, double> med;
        for (const auto& m : profile.measures()) {
            med[m] = median_of(profile.column(m));
        }
        med["IH"] = median_of(ih.ih);
        r.medians.push_back(std::move(med));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

double trend(const SweepResult& r, const std::string& measure)
{
    std::vector<double> meds;
    for (const auto& m : r.medians) {
        meds.push_back(m.at(measure));
    }
    return spearman(r.parameters, meds);
}

Outcome compare(const std::string& what, const std::vector<double>& got, const std::vector<double>& expect, double tol,
                double& worst)
{
    if (got.size() != expect.size()) {
        return {false, what + ": length mismatch"};
    }
    for (std::size_t i = 0; i < got.size(); ++i) {
        const double d = std::abs(got[i] - expect[i]);
        worst = std::max(worst, d);
        if (!(d <= tol)) {
            return {false, what + " instance " + std::to_string(i) + " differs by " + std::to_string(d)};
        }
    }
    return {true, ""};
}

class RuleClassifier final : public Classifier {
public:
    explicit RuleClassifier(bool flip) : flip_(flip) {}
    void fit(const Matrix&, std::span<const int>, std::size_t n_classes) override { classes_ = n_classes; }
    std::vector<double> predict_proba(std::span<const double> x) const override
    {
        std::vector<double> p(classes_, 0.0);
        p[((x[0] > 0.5) != flip_) ? 1 : 0] = 1.0;
        return p;
    }

private:
    bool flip_;
    std::size_t classes_ = 0;
};

class ShiftedRegressor final : public Regressor {
public:
    explicit ShiftedRegressor(double shift) : shift_(shift) {}
    void fit(const Matrix&, std::span<const double>) override {}
    double predict(std::span<const double> x) const override { return 2.0 + 10.0 * x[0] + shift_; }

private:
    double shift_;
};

std::string profile_csv(const HardnessProfile& p)
{
    std::ostringstream out;
    write_profile_csv(p, out);
    return out.str();
}

Dataset fuzz_dataset(std::uint64_t seed)
{
    const std::size_t n = 6 + (seed * 37) % 195; // 6..200
    const std::size_t m = 1 + seed % 5;
    if (seed % 2 == 0) {
        return testing::random_classification(seed, n, m, 2 + seed % 4);
    }
    return testing::random_regression(seed, std::max(n, m + 2), m);
}

} // namespace

int main()
{
    // Singleton-class and fold-reduction notices are expected in the fuzz set.
    set_warning_handler(nullptr);

    const SweepResult cls = run_sweep(TaskKind::classification, {0.2, 0.6, 1.0, 1.4, 1.8});

    report("AC1", "classification sweep IH trend", [&] {
        const double rho = trend(cls, "IH");
        const bool fast = cls.seconds < sweep_seconds_limit;
        return Outcome{rho >= trend_threshold && fast,
                       "Spearman(sd, median IH) = " + fmt(rho) + " (need >= " + fmt(trend_threshold) +
                           "), sweep took " + fmt(cls.seconds) + "s (limit " + fmt(sweep_seconds_limit) + "s)"};
    });

    report("AC2", "smooth classification measures trend", [&] {
        Outcome out{true, ""};
        for (const char* m : {"CLD", "N2", "LSC", "LSR", "U", "De"}) {
            const double rho = trend(cls, m);
            out.detail += std::string(out.detail.empty() ? "" : ", ") + m + "=" + fmt(rho);
            out.pass = out.pass && rho >= trend_threshold;
        }
        out.detail += " (each need >= " + fmt(trend_threshold) + ")";
        return out;
    });

    report("AC3", "easy-regime zeros", [&] {
        SweepSpec spec;
        spec.n = 200;
        spec.parameters = {0.2, 0.5};
        Outcome out{true, ""};
        for (const auto& member : gen_sweep(spec)) {
            const auto p = classification_profile(member.dataset);
            const double kdn = median_of(p.column("kDN"));
            const double n1 = median_of(p.column("N1"));
            const double f1 = median_of(p.column("F1"));
            out.pass = out.pass && kdn == 0.0 && n1 <= n1_easy_threshold && f1 == 0.0;
            out.detail += std::string(out.detail.empty() ? "" : "; ") + "sd=" + fmt(member.parameter) +
                          ": median kDN=" + fmt(kdn) + " N1=" + fmt(n1) + " F1=" + fmt(f1);
        }
        return out;
    });

    report("AC4", "regression sweep trends", [&] {
        const SweepResult reg = run_sweep(TaskKind::regression, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0});
        const double ih = trend(reg, "IH");
        const double le = trend(reg, "LE");
        const double s2 = trend(reg, "S2");
        const bool fast = reg.seconds < sweep_seconds_limit;
        return Outcome{ih >= trend_threshold && le >= trend_threshold && s2 >= s2_trend_threshold && fast,
                       "Spearman(sigma, median): IH=" + fmt(ih) + " LE=" + fmt(le) + " (need >= " +
                           fmt(trend_threshold) + "), S2=" + fmt(s2) + " (need >= " + fmt(s2_trend_threshold) +
                           "), sweep took " + fmt(reg.seconds) + "s"};
    });

    report("AC5", "oracle equivalence", [&] {
        double worst = 0.0;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const std::size_t n = 6 + (seed * 7) % 55; // 6..60
            const std::size_t m = 1 + seed % 4;

            const auto cds = testing::random_classification(seed, n, m, 2 + seed % 3);
            const auto cp = classification_profile(cds);
            const auto cd = oracle::distances(oracle::scaled_rows(cds));
            const auto& y = cds.labels().index;
            const std::vector<std::pair<const char*, std::vector<double>>> cls_checks{
                {"kDN", oracle::kdn(cd, y, 5)}, {"N1", oracle::n1(cd, y)},   {"N2", oracle::n2(cd, y)},
                {"LSC", oracle::lsc(cd, y)},    {"LSR", oracle::lsr(cd, y)}, {"U", oracle::usefulness(cd, y)},
                {"De", oracle::density(cd, y, 0.15, true)}};
            for (const auto& [name, expect] : cls_checks) {
                auto o = compare(std::string(name) + " seed " + std::to_string(seed), cp.column(name), expect,
                                 oracle_tolerance, worst);
                if (!o.pass) {
                    return o;
                }
            }

            const auto rds = testing::random_regression(seed, std::max(n, m + 2), m);
            const auto rp = regression_profile(rds);
            const auto rd = oracle::distances(oracle::scaled_rows(rds));
            const auto ry = oracle::minmax(rds.responses());
            const std::vector<std::pair<const char*, std::vector<double>>> reg_checks{
                {"S1", oracle::s1(rd, ry)},
                {"S2", oracle::s2(rd, ry)},
                {"S3", oracle::s3(rd, ry, 5)},
                {"HB", oracle::hb(ry, 10)},
                {"De", oracle::density(rd, {}, 0.15, false)}};
            for (const auto& [name, expect] : reg_checks) {
                auto o = compare(std::string(name) + " seed " + std::to_string(seed), rp.column(name), expect,
                                 oracle_tolerance, worst);
                if (!o.pass) {
                    return o;
                }
            }
        }
        std::size_t trees = 0;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const std::size_t n = 2 + seed % 6; // 2..7
            const auto ds = testing::random_regression(seed, n, 1 + seed % 3);
            const auto mst = build_mst(pairwise_distances(scale(ds)));
            const double best = oracle::exhaustive_mst_weight(oracle::distances(oracle::scaled_rows(ds)));
            const double d = std::abs(mst.total_weight() - best);
            worst = std::max(worst, d);
            if (!(d <= oracle_tolerance)) {
                return Outcome{false, "MST weight seed " + std::to_string(seed) + " off by " + std::to_string(d)};
            }
            ++trees;
        }
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "50 classification + 50 regression datasets, 11 measures; %zu exhaustive MSTs; max |diff| = "
                      "%.3g (tol %.0e)",
                      trees, worst, oracle_tolerance);
        return Outcome{true, buf};
    });

    report("AC6", "analytic instance hardness", [&] {
        Matrix x(20, 1);
        std::vector<std::string> labels(20);
        std::vector<double> y(20);
        for (std::size_t i = 0; i < 20; ++i) {
            x(i, 0) = static_cast<double>(i) / 19.0;
            labels[i] = i >= 10 ? "hi" : "lo";
            y[i] = 2.0 + 10.0 * x(i, 0);
        }
        const auto cds = Dataset::classification("rule", x, labels);
        auto rule_pool = [](bool flip) {
            LearnerPool pool;
            for (int c = 0; c < 3; ++c) {
                pool.learners.push_back(
                    {"rule", [flip](std::uint64_t) { return std::make_unique<RuleClassifier>(flip); }, {}});
            }
            return pool;
        };
        const auto plan = make_cv_plan(cds, 5, 0);
        const auto good = ih_classification(cds, rule_pool(false), plan);
        const auto bad = ih_classification(cds, rule_pool(true), plan);
        const bool zero = std::all_of(good.ih.begin(), good.ih.end(), [](double v) { return v == 0.0; });
        const bool one = std::all_of(bad.ih.begin(), bad.ih.end(), [](double v) { return v == 1.0; });

        const auto rds = Dataset::regression("shift", x, y);
        const double gamma = gamma_signal_power(y);
        LearnerPool rpool;
        rpool.kind = TaskKind::regression;
        rpool.learners.push_back(
            {"shift", {}, [gamma](std::uint64_t) { return std::make_unique<ShiftedRegressor>(std::sqrt(gamma)); }});
        const auto reg = ih_regression(rds, rpool, make_cv_plan(rds, 5, 0));
        double worst = 0.0;
        for (double v : reg.ih) {
            worst = std::max(worst, std::abs(v - (1.0 - std::exp(-1.0))));
        }
        char buf[160];
        std::snprintf(buf, sizeof buf, "oracle pool IH==0: %s, adversarial IH==1: %s, regression max |IH-(1-e^-1)| = %.3g",
                      zero ? "yes" : "no", one ? "yes" : "no", worst);
        return Outcome{zero && one && worst <= ih_analytic_tolerance, buf};
    });

    report("AC7", "range, determinism and permutation fuzz", [&] {
        std::size_t values = 0;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const auto ds = fuzz_dataset(seed);
            const bool is_cls = ds.kind() == TaskKind::classification;
            const auto p = is_cls ? classification_profile(ds) : regression_profile(ds);
            const auto again = is_cls ? classification_profile(ds) : regression_profile(ds);
            const std::string where = "seed " + std::to_string(seed);
            if (profile_csv(p) != profile_csv(again)) {
                return Outcome{false, where + ": rerun not byte-identical"};
            }
            const double s2_max = std::sqrt(static_cast<double>(ds.dims())) + 1e-12;
            for (const auto& m : p.measures()) {
                for (double v : p.column(m)) {
                    ++values;
                    const double upper = m == "LE" ? INFINITY : m == "S2" ? s2_max : m == "S3" ? 1.0 + 1e-9 : 1.0;
                    if (!std::isfinite(v) || v < 0.0 || v > upper) {
                        return Outcome{false, where + ": " + m + " = " + std::to_string(v) + " out of range"};
                    }
                }
            }
            const auto order = testing::random_permutation(ds.size(), seed + 7);
            const auto shuffled = is_cls ? classification_profile(ds.permuted(order))
                                         : regression_profile(ds.permuted(order));
            const auto expect = p.permuted(order);
            for (const auto& m : p.measures()) {
                const double tol = (m == "LE" || m == "CLD") ? permutation_tolerance_fitted : permutation_tolerance;
                for (std::size_t r = 0; r < ds.size(); ++r) {
                    if (!(std::abs(shuffled.value(r, m) - expect.value(r, m)) <= tol)) {
                        return Outcome{false, where + ": " + m + " not permutation invariant"};
                    }
                }
            }
            if (seed % 10 == 0 && ds.size() >= 10) {
                const auto pool = default_pool(ds.kind(), seed);
                const auto a = instance_hardness(ds, pool, make_cv_plan(ds, 5, seed));
                const auto b = instance_hardness(ds, pool, make_cv_plan(ds, 5, seed));
                if (a.ih != b.ih) {
                    return Outcome{false, where + ": IH rerun differs"};
                }
                for (double v : a.ih) {
                    if (!(v >= 0.0 && v <= 1.0)) {
                        return Outcome{false, where + ": IH out of [0,1]"};
                    }
                }
            }
        }
        return Outcome{true, "200 datasets, " + std::to_string(values) +
                                 " values in range; reruns byte-identical; permutations consistent"};
    });

    report("AC8", "fixture values", [&] {
        const auto c6 = testing::fix_c6();
        ClassificationOptions k2;
        k2.k = 2;
        const std::vector<std::string> kdn_only{"kDN"};
        const double kdn_a = classification_profile(c6, k2, kdn_only).value(0, "kDN");
        const auto pc = classification_profile(c6);
        const auto pr = regression_profile(testing::fix_r4());
        auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12; };
        bool ok = kdn_a == 0.0 && near(pc.value(0, "N2"), 1.0 / (1.0 + std::sqrt(200.0))) &&
                  pc.value(0, "LSC") == 0.0 && near(pc.value(0, "U"), 0.6) && near(pr.value(0, "S3"), 4.0 / 9.0);
        for (std::size_t i = 0; i < 4; ++i) {
            ok = ok && near(pr.value(i, "HB"), 0.75) && pr.value(i, "LE") <= 1e-12 && pr.value(i, "CFE") == 0.0;
        }
        return Outcome{ok, "kdn(A)@k2=" + fmt(kdn_a) + " n2(A)=" + fmt(pc.value(0, "N2")) + " lsc(A)=" +
                               fmt(pc.value(0, "LSC")) + " u(A)=" + fmt(pc.value(0, "U")) + " S3(x0)=" +
                               fmt(pr.value(0, "S3")) + " HB=" + fmt(pr.value(0, "HB")) + " LE=" +
                               fmt(pr.value(0, "LE")) + " CFE=" + fmt(pr.value(0, "CFE"))};
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
