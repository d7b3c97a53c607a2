// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hardness/dataset.hpp"
#include "hardness/matrix.hpp"

namespace hardness {

struct ColumnRange {
    double min = 0.0;
    double max = 0.0;
};

// Min-max scaled copy of a dataset. Features (and a continuous target) live in
// [0,1]; constant columns become all zeros. Every hardness measure consumes
// this view; the raw Dataset is kept for reporting.
struct ScaledView {
    TaskKind kind = TaskKind::classification;
    Matrix features;
    std::vector<ColumnRange> feature_ranges;
    std::optional<Labels> labels;
    std::vector<double> responses;
    std::optional<ColumnRange> response_range;

    std::size_t size() const noexcept { return features.rows(); }
    std::size_t dims() const noexcept { return features.cols(); }
    const Labels& class_labels() const;
};

ScaledView scale(const Dataset& ds);

// (v - min) / (max - min); all zeros when max == min.
std::vector<double> minmax_scale(std::span<const double> values, ColumnRange* range = nullptr);

} // namespace hardness
