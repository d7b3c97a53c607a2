// SPDX-License-Identifier: Apache-2.0

#include "hardness/profile.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "hardness/csv.hpp"
#include "hardness/errors.hpp"

namespace hardness {

const std::vector<std::string>& classification_measures()
{
    static const std::vector<std::string> names = {"kDN", "DCP", "TD", "CLD", "CB", "F1",
                                                   "N1",  "N2",  "LSC", "LSR", "U",  "De"};
    return names;
}

const std::vector<std::string>& regression_measures()
{
    static const std::vector<std::string> names = {"CFE", "LE", "S1", "S2", "S3", "HB", "TD", "De"};
    return names;
}

const std::vector<std::string>& measure_catalog(TaskKind kind)
{
    return kind == TaskKind::classification ? classification_measures() : regression_measures();
}

std::vector<std::string> parse_measure_list(std::string_view list, TaskKind kind)
{
    const auto& catalog = measure_catalog(kind);
    if (list.empty()) {
        return catalog;
    }
    std::vector<bool> wanted(catalog.size(), false);
    while (!list.empty()) {
        const auto comma = list.find(',');
        auto item = list.substr(0, comma);
        list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
        while (!item.empty() && item.front() == ' ') {
            item.remove_prefix(1);
        }
        while (!item.empty() && item.back() == ' ') {
            item.remove_suffix(1);
        }
        if (item.empty()) {
            continue;
        }
        auto it = std::find(catalog.begin(), catalog.end(), item);
        if (it == catalog.end()) {
            throw ParameterError("unknown " + std::string(to_string(kind)) + " measure '" + std::string(item) + "'");
        }
        wanted[static_cast<std::size_t>(it - catalog.begin())] = true;
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        if (wanted[i]) {
            out.push_back(catalog[i]);
        }
    }
    if (out.empty()) {
        throw ParameterError("empty measure list");
    }
    return out;
}

HardnessProfile::HardnessProfile(TaskKind kind, std::vector<std::string> measures, std::size_t instances)
    : kind_(kind)
    , instances_(instances)
    , measures_(std::move(measures))
    , columns_(measures_.size(), std::vector<double>(instances, 0.0))
{
}

bool HardnessProfile::has(std::string_view measure) const noexcept
{
    return std::find(measures_.begin(), measures_.end(), measure) != measures_.end();
}

std::size_t HardnessProfile::index_of(std::string_view measure) const
{
    auto it = std::find(measures_.begin(), measures_.end(), measure);
    if (it == measures_.end()) {
        throw ParameterError("profile has no measure '" + std::string(measure) + "'");
    }
    return static_cast<std::size_t>(it - measures_.begin());
}

std::vector<double>& HardnessProfile::column(std::string_view measure) { return columns_[index_of(measure)]; }

const std::vector<double>& HardnessProfile::column(std::string_view measure) const
{
    return columns_[index_of(measure)];
}

HardnessProfile HardnessProfile::permuted(std::span<const std::size_t> order) const
{
    HardnessProfile out(kind_, measures_, order.size());
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        for (std::size_t r = 0; r < order.size(); ++r) {
            out.columns_[c][r] = columns_[c][order[r]];
        }
    }
    return out;
}

void write_profile_csv(const HardnessProfile& profile, std::ostream& out)
{
    out << "instance_id";
    for (const auto& m : profile.measures()) {
        out << ',' << m;
    }
    out << '\n';
    for (std::size_t i = 0; i < profile.size(); ++i) {
        out << i;
        for (const auto& m : profile.measures()) {
            out << ',' << csv::format_real(profile.value(i, m), 9);
        }
        out << '\n';
    }
}

const std::vector<double>* NumericTable::find(std::string_view column) const noexcept
{
    auto it = std::find(columns.begin(), columns.end(), column);
    return it == columns.end() ? nullptr : &values[static_cast<std::size_t>(it - columns.begin())];
}

NumericTable read_instance_table(std::istream& in, std::string_view source)
{
    auto rows = csv::parse(in);
    if (rows.empty() || rows.front().empty() || rows.front().front() != "instance_id") {
        throw SchemaError(std::string(source) + ": expected a header starting with instance_id");
    }
    NumericTable table;
    table.columns.assign(rows.front().begin() + 1, rows.front().end());
    table.values.assign(table.columns.size(), {});
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != table.columns.size() + 1) {
            throw IngestionError(r, "", std::string(source) + ": row " + std::to_string(r) + " has the wrong field count");
        }
        for (std::size_t c = 1; c < row.size(); ++c) {
            double v = 0;
            const auto& cell = row[c];
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
                throw IngestionError(r, table.columns[c - 1],
                                     std::string(source) + ": row " + std::to_string(r) + ", column '" +
                                         table.columns[c - 1] + "': '" + cell + "' is not a finite real");
            }
            table.values[c - 1].push_back(v);
        }
    }
    return table;
}

} // namespace hardness
