// SPDX-License-Identifier: Apache-2.0

#include "hardness/app/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hardness/csv.hpp"
#include "hardness/errors.hpp"
#include "hardness/profile.hpp"

namespace hardness::app {

namespace {

const std::vector<double>* column_of(const SweepInput& in, const std::string& measure)
{
    const auto it = std::find(in.measures.begin(), in.measures.end(), measure);
    return it == in.measures.end() ? nullptr : &in.columns[static_cast<std::size_t>(it - in.measures.begin())];
}

nlohmann::ordered_json summary_json(const FiveNumberSummary& s)
{
    nlohmann::ordered_json j;
    j["min"] = s.min;
    j["q1"] = s.q1;
    j["median"] = s.median;
    j["q3"] = s.q3;
    j["max"] = s.max;
    j["mean"] = s.mean;
    return j;
}

} // namespace

SweepReport build_report(TaskKind kind, const std::vector<SweepInput>& inputs)
{
    SweepReport report;
    report.kind = kind;

    // Catalog measures first, in catalog order, then anything else, IH last.
    const auto catalog = kind == TaskKind::classification ? classification_measures() : regression_measures();
    auto present = [&](const std::string& m) {
        return std::any_of(inputs.begin(), inputs.end(), [&](const SweepInput& in) { return column_of(in, m); });
    };
    for (const auto& m : catalog) {
        if (present(m)) {
            report.measures.push_back(m);
        }
    }
    for (const auto& in : inputs) {
        for (const auto& m : in.measures) {
            if (m != "IH" && std::find(report.measures.begin(), report.measures.end(), m) == report.measures.end()) {
                report.measures.push_back(m);
            }
        }
    }
    if (present("IH")) {
        report.measures.push_back("IH");
    }

    for (const auto& in : inputs) {
        DatasetSummary d{in.name, in.parameter, in.seed, in.columns.empty() ? 0 : in.columns.front().size(), {}};
        for (const auto& m : report.measures) {
            if (const auto* col = column_of(in, m); col && !col->empty()) {
                d.summaries[m] = summarize(*col);
            }
        }
        report.datasets.push_back(std::move(d));
    }

    for (const auto& m : report.measures) {
        std::vector<double> params, medians;
        for (const auto& d : report.datasets) {
            if (const auto it = d.summaries.find(m); it != d.summaries.end()) {
                params.push_back(d.parameter);
                medians.push_back(it->second.median);
            }
        }
        if (params.size() >= 2) {
            report.trend[m] = spearman(params, medians);
        }
        if (m == "IH") {
            continue;
        }
        std::vector<double> values, ih;
        for (const auto& in : inputs) {
            const auto* col = column_of(in, m);
            const auto* h = column_of(in, "IH");
            if (col && h) {
                values.insert(values.end(), col->begin(), col->end());
                ih.insert(ih.end(), h->begin(), h->end());
            }
        }
        if (values.size() >= 2) {
            report.ih_correlation[m] = spearman(values, ih);
        }
    }
    return report;
}

std::string SweepReport::to_json() const
{
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(kind));
    j["catalog"] = std::string(measure_catalog_version);
    j["measures"] = measures;
    j["datasets"] = nlohmann::ordered_json::array();
    for (const auto& d : datasets) {
        nlohmann::ordered_json item;
        item["name"] = d.name;
        item["parameter"] = d.parameter;
        item["seed"] = d.seed;
        item["n"] = d.instances;
        nlohmann::ordered_json sums;
        for (const auto& m : measures) {
            if (const auto it = d.summaries.find(m); it != d.summaries.end()) {
                sums[m] = summary_json(it->second);
            }
        }
        item["summaries"] = sums;
        j["datasets"].push_back(item);
    }
    nlohmann::ordered_json trend_json = nlohmann::ordered_json::object();
    nlohmann::ordered_json corr_json = nlohmann::ordered_json::object();
    for (const auto& m : measures) {
        if (const auto it = trend.find(m); it != trend.end()) {
            trend_json[m] = it->second;
        }
        if (const auto it = ih_correlation.find(m); it != ih_correlation.end()) {
            corr_json[m] = it->second;
        }
    }
    j["trend"] = trend_json;
    j["ih_correlation"] = corr_json;
    return j.dump(2) + "\n";
}

std::string SweepReport::summary_csv() const
{
    std::ostringstream out;
    out << "dataset,parameter,measure,min,q1,median,q3,max,mean\n";
    for (const auto& d : datasets) {
        for (const auto& m : measures) {
            const auto it = d.summaries.find(m);
            if (it == d.summaries.end()) {
                continue;
            }
            const auto& s = it->second;
            out << csv::escape(d.name) << ',' << csv::format_real(d.parameter, 9) << ',' << m;
            for (double v : {s.min, s.q1, s.median, s.q3, s.max, s.mean}) {
                out << ',' << csv::format_real(v, 9);
            }
            out << '\n';
        }
    }
    return out.str();
}

std::string SweepReport::trend_csv() const
{
    std::ostringstream out;
    out << "measure,spearman_parameter_median,spearman_with_ih\n";
    for (const auto& m : measures) {
        out << m << ',';
        if (const auto it = trend.find(m); it != trend.end()) {
            out << csv::format_real(it->second, 9);
        }
        out << ',';
        if (const auto it = ih_correlation.find(m); it != ih_correlation.end()) {
            out << csv::format_real(it->second, 9);
        }
        out << '\n';
    }
    return out.str();
}

BoxStats box_stats(std::vector<double> values)
{
    if (values.empty()) {
        throw ParameterError("box_stats: no values");
    }
    std::sort(values.begin(), values.end());
    BoxStats b;
    b.q1 = linear_quantile(values, 0.25);
    b.median = linear_quantile(values, 0.5);
    b.q3 = linear_quantile(values, 0.75);
    const double iqr = b.q3 - b.q1;
    const double lo = b.q1 - 1.5 * iqr;
    const double hi = b.q3 + 1.5 * iqr;
    b.whisker_low = b.q1;
    b.whisker_high = b.q3;
    for (double v : values) {
        if (v < lo || v > hi) {
            b.outliers.push_back(v);
        } else {
            b.whisker_low = std::min(b.whisker_low, v);
            b.whisker_high = std::max(b.whisker_high, v);
        }
    }
    return b;
}

} // namespace hardness::app
