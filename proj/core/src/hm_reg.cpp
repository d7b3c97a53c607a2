// SPDX-License-Identifier: Apache-2.0

#include "hardness/hm_reg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include <json.hpp>

#include "hardness/cart.hpp"
#include "hardness/errors.hpp"
#include "hardness/hm_class.hpp"
#include "hardness/learners.hpp"
#include "hardness/parallel.hpp"
#include "hardness/scaling.hpp"
#include "hardness/stats.hpp"

namespace hardness {

std::size_t CfeTrace::survivor_count() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(removal_round.begin(), removal_round.end(), [](const auto& r) { return !r.has_value(); }));
}

std::string CfeTrace::to_json() const
{
    nlohmann::ordered_json j;
    j["rounds"] = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < rounds.size(); ++r) {
        nlohmann::ordered_json round;
        round["round"] = r + 1;
        round["feature"] = rounds[r].feature;
        round["spearman"] = rounds[r].correlation;
        round["removed"] = rounds[r].removed;
        j["rounds"].push_back(round);
    }
    j["round_count"] = rounds.size();
    nlohmann::ordered_json removal = nlohmann::ordered_json::array();
    for (const auto& r : removal_round) {
        removal.push_back(r ? nlohmann::ordered_json(*r) : nlohmann::ordered_json(nullptr));
    }
    j["removal_round"] = removal;
    return j.dump(2) + "\n";
}

CfeResult cfe(const Matrix& features, std::span<const double> responses, double residual_threshold)
{
    const std::size_t n = features.rows();
    const std::size_t m = features.cols();
    if (responses.size() != n) {
        throw ParameterError("cfe: response count does not match rows");
    }
    CfeResult result;
    result.trace.removal_round.assign(n, std::nullopt);

    std::vector<std::size_t> remaining(n);
    std::iota(remaining.begin(), remaining.end(), std::size_t{0});
    std::vector<bool> used(m, false);

    while (!remaining.empty() && std::find(used.begin(), used.end(), false) != used.end()) {
        std::vector<double> y(remaining.size());
        for (std::size_t r = 0; r < remaining.size(); ++r) {
            y[r] = responses[remaining[r]];
        }
        std::size_t best = m;
        double best_abs = -1.0;
        double best_rho = 0.0;
        std::vector<double> best_column;
        for (std::size_t f = 0; f < m; ++f) {
            if (used[f]) {
                continue;
            }
            std::vector<double> column(remaining.size());
            for (std::size_t r = 0; r < remaining.size(); ++r) {
                column[r] = features(remaining[r], f);
            }
            const double rho = remaining.size() >= 2 ? spearman(column, y) : 0.0;
            if (std::abs(rho) > best_abs) {
                best = f;
                best_abs = std::abs(rho);
                best_rho = rho;
                best_column = std::move(column);
            }
        }

        // Two or fewer points are interpolated exactly.
        std::vector<double> residuals(remaining.size(), 0.0);
        if (remaining.size() > 2) {
            residuals = simple_linear_fit(best_column, y);
        }
        CfeRound round{best, best_rho, {}};
        std::vector<std::size_t> kept;
        for (std::size_t r = 0; r < remaining.size(); ++r) {
            (std::abs(residuals[r]) <= residual_threshold ? round.removed : kept).push_back(remaining[r]);
        }
        if (best_rho == 0.0 && round.removed.empty()) {
            break;
        }
        used[best] = true;
        for (auto i : round.removed) {
            result.trace.removal_round[i] = result.trace.rounds.size() + 1;
        }
        result.trace.rounds.push_back(std::move(round));
        remaining = std::move(kept);
    }

    const auto rounds = static_cast<double>(result.trace.round_count());
    result.values.assign(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (const auto& r = result.trace.removal_round[i]) {
            result.values[i] = (static_cast<double>(*r) - 1.0) / rounds;
        }
    }
    return result;
}

double le(const OlsFit& fit, std::size_t i) { return std::abs(fit.residuals[i]); }

double s1(const MstAdjacency& mst, std::span<const double> responses, std::size_t i)
{
    const auto& nb = mst.neighbors(i);
    if (nb.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (auto j : nb) {
        sum += std::abs(responses[i] - responses[j]);
    }
    return sum / static_cast<double>(nb.size());
}

std::vector<double> s2_values(const DistanceMatrix& dm, std::span<const double> responses)
{
    const std::size_t n = dm.size();
    if (n < 2 || responses.size() != n) {
        throw ParameterError("s2: need at least 2 instances and one response per instance");
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return responses[a] < responses[b]; });
    std::vector<double> out(n);
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t i = order[p];
        if (p == 0) {
            out[i] = dm(i, order[1]);
        } else if (p + 1 == n) {
            out[i] = dm(i, order[p - 1]);
        } else {
            out[i] = (dm(i, order[p - 1]) + dm(i, order[p + 1])) / 2.0;
        }
    }
    return out;
}

double s3(const DistanceMatrix& dm, std::span<const double> responses, std::size_t i, std::size_t k)
{
    const double pred = loo_knn_regress(dm, responses, i, std::min(k, dm.size() - 1));
    const double err = responses[i] - pred;
    return err * err;
}

std::size_t hb_bin(double value, std::size_t bins)
{
    const double pos = std::floor(value * static_cast<double>(bins));
    if (pos <= 0.0) {
        return 0;
    }
    return std::min(static_cast<std::size_t>(pos), bins - 1);
}

std::vector<double> hb_values(std::span<const double> responses, std::size_t bins)
{
    if (bins == 0) {
        throw ParameterError("hb: bin count must be positive");
    }
    std::vector<std::size_t> counts(bins, 0);
    for (double y : responses) {
        ++counts[hb_bin(y, bins)];
    }
    std::vector<double> out(responses.size());
    const auto n = static_cast<double>(responses.size());
    for (std::size_t i = 0; i < responses.size(); ++i) {
        out[i] = 1.0 - static_cast<double>(counts[hb_bin(responses[i], bins)]) / n;
    }
    return out;
}

HardnessProfile regression_profile(const Dataset& ds, const RegressionOptions& options,
                                   std::span<const std::string> measures, CfeTrace* trace)
{
    if (ds.kind() != TaskKind::regression) {
        throw ValidationError("regression_profile: dataset '" + ds.name() + "' has class labels");
    }
    if (ds.size() < 4) {
        throw ValidationError("regression_profile: dataset '" + ds.name() + "' needs at least 4 instances");
    }
    std::vector<std::string> selected = measures.empty() ? regression_measures()
                                                         : std::vector<std::string>(measures.begin(), measures.end());
    HardnessProfile profile(TaskKind::regression, selected, ds.size());
    auto wants = [&](std::string_view m) { return profile.has(m); };

    const ScaledView view = scale(ds);
    const auto& y = view.responses;
    const std::size_t n = ds.size();

    DistanceMatrix dm;
    if (wants("S1") || wants("S2") || wants("S3") || wants("De")) {
        dm = pairwise_distances(view);
    }

    for (const auto& name : profile.measures()) {
        auto& col = profile.column(name);
        if (name == "CFE") {
            auto result = cfe(view.features, y, options.cfe_residual_threshold);
            col = std::move(result.values);
            if (trace) {
                *trace = std::move(result.trace);
            }
        } else if (name == "LE") {
            const auto fit = fit_ols(view.features, ds.responses());
            for (std::size_t i = 0; i < n; ++i) {
                col[i] = le(fit, i);
            }
        } else if (name == "S1") {
            const auto mst = build_mst(dm);
            parallel_for(n, [&](std::size_t i) { col[i] = s1(mst, y, i); });
        } else if (name == "S2") {
            col = s2_values(dm, y);
        } else if (name == "S3") {
            parallel_for(n, [&](std::size_t i) { col[i] = s3(dm, y, i, options.k); });
        } else if (name == "HB") {
            col = hb_values(y, options.hb_bins);
        } else if (name == "TD") {
            const auto tree = fit_cart(view, CartMode::regression, options.td_min_leaf);
            for (std::size_t i = 0; i < n; ++i) {
                col[i] = tree_depth_ratio(tree, i);
            }
        } else if (name == "De") {
            const auto graph = epsilon_graph(dm, options.de_quantile, false);
            for (std::size_t i = 0; i < n; ++i) {
                col[i] = density(graph, i);
            }
        } else {
            throw ParameterError("unknown regression measure '" + name + "'");
        }
    }
    return profile;
}

} // namespace hardness
