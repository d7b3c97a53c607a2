// SPDX-License-Identifier: Apache-2.0

#include "hardness/hm_class.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>

#include "hardness/diagnostics.hpp"
#include "hardness/errors.hpp"
#include "hardness/learners.hpp"
#include "hardness/parallel.hpp"
#include "hardness/scaling.hpp"

namespace hardness {

namespace {

std::size_t class_size(const Labels& labels, std::size_t i)
{
    return static_cast<std::size_t>(std::count(labels.index.begin(), labels.index.end(), labels.index[i]));
}

} // namespace

double kdn(const DistanceMatrix& dm, const Labels& labels, std::size_t i, std::size_t k)
{
    const std::size_t kk = std::min(k, dm.size() - 1);
    const auto nb = knn(dm, i, kk);
    const auto disagree = std::count_if(nb.begin(), nb.end(), [&](std::size_t j) { return labels.index[j] != labels.index[i]; });
    return static_cast<double>(disagree) / static_cast<double>(kk);
}

double dcp(const CartTree& tree, const Labels& labels, std::size_t i)
{
    const auto& leaf = tree.node(tree.leaf_of(i));
    const auto same = std::count_if(leaf.members.begin(), leaf.members.end(),
                                    [&](std::size_t j) { return labels.index[j] == labels.index[i]; });
    return 1.0 - static_cast<double>(same) / static_cast<double>(leaf.size());
}

double tree_depth_ratio(const CartTree& tree, std::size_t i)
{
    if (tree.max_depth() == 0) {
        return 0.0;
    }
    return static_cast<double>(tree_locate(tree, i).depth) / static_cast<double>(tree.max_depth());
}

double cld(std::span<const double> posterior, std::size_t true_class)
{
    double other = 0.0;
    for (std::size_t c = 0; c < posterior.size(); ++c) {
        if (c != true_class) {
            other = std::max(other, posterior[c]);
        }
    }
    return std::clamp((1.0 - (posterior[true_class] - other)) / 2.0, 0.0, 1.0);
}

double class_balance(const Labels& labels, std::size_t i)
{
    return 1.0 - static_cast<double>(class_size(labels, i)) / static_cast<double>(labels.size());
}

ClassRanges class_feature_ranges(const Matrix& features, const Labels& labels)
{
    const std::size_t classes = labels.class_count();
    const std::size_t m = features.cols();
    ClassRanges r{Matrix(classes, m, std::numeric_limits<double>::infinity()),
                  Matrix(classes, m, -std::numeric_limits<double>::infinity())};
    for (std::size_t i = 0; i < features.rows(); ++i) {
        const auto c = static_cast<std::size_t>(labels.index[i]);
        for (std::size_t f = 0; f < m; ++f) {
            r.min(c, f) = std::min(r.min(c, f), features(i, f));
            r.max(c, f) = std::max(r.max(c, f), features(i, f));
        }
    }
    return r;
}

double f1_overlap(const ClassRanges& ranges, const Matrix& features, const Labels& labels, std::size_t i)
{
    const std::size_t m = features.cols();
    const auto own = static_cast<std::size_t>(labels.index[i]);
    std::size_t overlapped = 0;
    for (std::size_t f = 0; f < m; ++f) {
        const double v = features(i, f);
        for (std::size_t c = 0; c < labels.class_count(); ++c) {
            if (c == own) {
                continue;
            }
            const double lo = std::max(ranges.min(own, f), ranges.min(c, f));
            const double hi = std::min(ranges.max(own, f), ranges.max(c, f));
            if (lo <= hi && lo <= v && v <= hi) {
                ++overlapped;
                break;
            }
        }
    }
    return static_cast<double>(overlapped) / static_cast<double>(m);
}

double n1(const MstAdjacency& mst, const Labels& labels, std::size_t i)
{
    const auto& nb = mst.neighbors(i);
    if (nb.empty()) {
        return 0.0;
    }
    const auto diff = std::count_if(nb.begin(), nb.end(), [&](std::size_t j) { return labels.index[j] != labels.index[i]; });
    return static_cast<double>(diff) / static_cast<double>(nb.size());
}

double n2(const LocalSetInfo& ls, const DistanceMatrix& dm, const Labels& labels, std::size_t i)
{
    const auto row = dm.row(i);
    std::optional<double> friend_distance;
    for (std::size_t j = 0; j < dm.size(); ++j) {
        if (j != i && labels.index[j] == labels.index[i] && (!friend_distance || row[j] < *friend_distance)) {
            friend_distance = row[j];
        }
    }
    if (!friend_distance) {
        return 1.0;
    }
    const double a = *friend_distance;
    const double b = ls.enemy_distance[i];
    if (a == 0.0 && b == 0.0) {
        return 0.5;
    }
    return a / (a + b);
}

double lsc(const LocalSetInfo& ls, const Labels& labels, std::size_t i)
{
    const std::size_t size = class_size(labels, i);
    if (size < 2) {
        return 1.0;
    }
    return 1.0 - static_cast<double>(ls.members[i].size()) / static_cast<double>(size - 1);
}

double lsr(const LocalSetInfo& ls, const DistanceMatrix& dm, const Labels& labels, std::size_t i)
{
    const auto row = dm.row(i);
    std::optional<double> farthest;
    for (std::size_t j = 0; j < dm.size(); ++j) {
        if (j != i && labels.index[j] == labels.index[i]) {
            farthest = std::max(farthest.value_or(0.0), row[j]);
        }
    }
    const double radius = ls.enemy_distance[i];
    if (!farthest || radius == 0.0) {
        return 1.0;
    }
    if (*farthest == 0.0) {
        return 0.0;
    }
    return 1.0 - std::min(1.0, radius / *farthest);
}

double usefulness(const LocalSetInfo& ls, std::size_t i)
{
    const std::size_t n = ls.members.size();
    std::size_t covered = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j != i && std::binary_search(ls.members[j].begin(), ls.members[j].end(), i)) {
            ++covered;
        }
    }
    return 1.0 - static_cast<double>(covered) / static_cast<double>(n - 1);
}

double density(const EpsilonGraph& graph, std::size_t i)
{
    return 1.0 - static_cast<double>(graph.degree(i)) / static_cast<double>(graph.size() - 1);
}

HardnessProfile classification_profile(const Dataset& ds, const ClassificationOptions& options,
                                       std::span<const std::string> measures)
{
    if (ds.kind() != TaskKind::classification) {
        throw ValidationError("classification_profile: dataset '" + ds.name() + "' has a continuous target");
    }
    if (ds.size() < 4) {
        throw ValidationError("classification_profile: dataset '" + ds.name() + "' needs at least 4 instances");
    }
    std::vector<std::string> selected = measures.empty()
                                            ? classification_measures()
                                            : std::vector<std::string>(measures.begin(), measures.end());
    HardnessProfile profile(TaskKind::classification, selected, ds.size());
    auto wants = [&](std::string_view m) { return profile.has(m); };
    auto any_of = [&](std::initializer_list<std::string_view> names) {
        return std::any_of(names.begin(), names.end(), wants);
    };

    const ScaledView view = scale(ds);
    const Labels& labels = view.class_labels();
    const std::size_t n = ds.size();

    DistanceMatrix dm;
    if (any_of({"kDN", "N1", "N2", "LSC", "LSR", "U", "De"})) {
        dm = pairwise_distances(view);
    }
    LocalSetInfo ls;
    if (any_of({"N2", "LSC", "LSR", "U"})) {
        ls = local_sets(dm, labels);
    }
    if (any_of({"N2", "LSC", "LSR"})) {
        const auto counts = labels.counts();
        for (std::size_t c = 0; c < counts.size(); ++c) {
            if (counts[c] == 1) {
                warn("dataset '" + ds.name() + "': class '" + labels.names[c] +
                     "' has a single instance; its N2, LSC and LSR are set to 1");
            }
        }
    }
    MstAdjacency mst;
    if (wants("N1")) {
        mst = build_mst(dm);
    }
    EpsilonGraph graph;
    if (wants("De")) {
        graph = epsilon_graph(dm, options.de_quantile, true, &labels);
    }
    CartTree dcp_tree;
    if (wants("DCP")) {
        dcp_tree = fit_cart(view, CartMode::classification, options.dcp_min_leaf);
    }
    CartTree td_tree;
    if (wants("TD")) {
        td_tree = fit_cart(view, CartMode::classification, 1);
    }
    Matrix posterior;
    if (wants("CLD")) {
        posterior = class_likelihood_matrix(view);
    }
    ClassRanges ranges;
    if (wants("F1")) {
        ranges = class_feature_ranges(view.features, labels);
    }

    struct Column {
        std::vector<double>* values;
        std::function<double(std::size_t)> eval;
    };
    std::vector<Column> columns;
    for (const auto& name : profile.measures()) {
        std::function<double(std::size_t)> eval;
        if (name == "kDN") {
            eval = [&](std::size_t i) { return kdn(dm, labels, i, options.k); };
        } else if (name == "DCP") {
            eval = [&](std::size_t i) { return dcp(dcp_tree, labels, i); };
        } else if (name == "TD") {
            eval = [&](std::size_t i) { return tree_depth_ratio(td_tree, i); };
        } else if (name == "CLD") {
            eval = [&](std::size_t i) { return cld(posterior.row(i), static_cast<std::size_t>(labels.index[i])); };
        } else if (name == "CB") {
            eval = [&](std::size_t i) { return class_balance(labels, i); };
        } else if (name == "F1") {
            eval = [&](std::size_t i) { return f1_overlap(ranges, view.features, labels, i); };
        } else if (name == "N1") {
            eval = [&](std::size_t i) { return n1(mst, labels, i); };
        } else if (name == "N2") {
            eval = [&](std::size_t i) { return n2(ls, dm, labels, i); };
        } else if (name == "LSC") {
            eval = [&](std::size_t i) { return lsc(ls, labels, i); };
        } else if (name == "LSR") {
            eval = [&](std::size_t i) { return lsr(ls, dm, labels, i); };
        } else if (name == "U") {
            eval = [&](std::size_t i) { return usefulness(ls, i); };
        } else if (name == "De") {
            eval = [&](std::size_t i) { return density(graph, i); };
        } else {
            throw ParameterError("unknown classification measure '" + name + "'");
        }
        columns.push_back({&profile.column(name), std::move(eval)});
    }
    parallel_for(n, [&](std::size_t i) {
        for (auto& col : columns) {
            (*col.values)[i] = col.eval(i);
        }
    });
    return profile;
}

} // namespace hardness
