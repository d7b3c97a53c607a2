// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hardness/dataset.hpp"
#include "hardness/stats.hpp"

namespace hardness::app {

// One sweep member as read back from disk: its parameter and one column per
// measure (IH included, under the name "IH").
struct SweepInput {
    std::string name;
    double parameter = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::string> measures;
    std::vector<std::vector<double>> columns;
};

struct DatasetSummary {
    std::string name;
    double parameter = 0.0;
    std::uint64_t seed = 0;
    std::size_t instances = 0;
    std::map<std::string, FiveNumberSummary> summaries;
};

struct SweepReport {
    TaskKind kind = TaskKind::classification;
    std::vector<std::string> measures; // display order, IH last
    std::vector<DatasetSummary> datasets;
    // Spearman(parameter, median measure); empty with fewer than two datasets.
    std::map<std::string, double> trend;
    // Spearman(measure, IH) over all instances of the sweep.
    std::map<std::string, double> ih_correlation;

    std::string to_json() const;
    std::string summary_csv() const;
    std::string trend_csv() const;
};

SweepReport build_report(TaskKind kind, const std::vector<SweepInput>& inputs);

// Tukey boxplot statistics: whiskers reach the most extreme values inside
// [q1 - 1.5 IQR, q3 + 1.5 IQR]; anything beyond is an outlier.
struct BoxStats {
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double whisker_low = 0.0;
    double whisker_high = 0.0;
    std::vector<double> outliers; // ascending
};

BoxStats box_stats(std::vector<double> values);

struct BoxSeries {
    std::string label;
    BoxStats stats;
};

std::string boxplot_svg(const std::string& title, const std::string& x_label, const std::vector<BoxSeries>& series);

} // namespace hardness::app
