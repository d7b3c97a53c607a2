// SPDX-License-Identifier: Apache-2.0

#include "hardness/scaling.hpp"

#include <algorithm>

#include "hardness/errors.hpp"

namespace hardness {

const Labels& ScaledView::class_labels() const
{
    if (!labels) {
        throw ValidationError("scaled view has a continuous target, not class labels");
    }
    return *labels;
}

std::vector<double> minmax_scale(std::span<const double> values, ColumnRange* range)
{
    std::vector<double> out(values.size(), 0.0);
    if (values.empty()) {
        return out;
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double min = *lo;
    const double max = *hi;
    if (range) {
        *range = {min, max};
    }
    if (max > min) {
        const double width = max - min;
        for (std::size_t i = 0; i < values.size(); ++i) {
            out[i] = (values[i] - min) / width;
        }
    }
    return out;
}

ScaledView scale(const Dataset& ds)
{
    ScaledView view;
    view.kind = ds.kind();
    view.features = Matrix(ds.size(), ds.dims());
    view.feature_ranges.resize(ds.dims());
    for (std::size_t c = 0; c < ds.dims(); ++c) {
        auto column = ds.features().column(c);
        view.features.set_column(c, minmax_scale(column, &view.feature_ranges[c]));
    }
    if (ds.kind() == TaskKind::classification) {
        view.labels = ds.labels();
    } else {
        ColumnRange r;
        view.responses = minmax_scale(ds.responses(), &r);
        view.response_range = r;
    }
    return view;
}

} // namespace hardness
