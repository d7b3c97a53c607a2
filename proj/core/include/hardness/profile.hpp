// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hardness/dataset.hpp"

namespace hardness {

inline constexpr std::string_view measure_catalog_version = "hardness-measures/1";

// Column order of the profile CSVs.
const std::vector<std::string>& classification_measures();
const std::vector<std::string>& regression_measures();
const std::vector<std::string>& measure_catalog(TaskKind kind);

// Parses "kDN,N1" against the catalog of `kind`, returning names in catalog
// order. An empty string selects the whole catalog. Unknown names throw
// ParameterError.
std::vector<std::string> parse_measure_list(std::string_view list, TaskKind kind);

// Per-instance measure values, one column per measure, every column oriented
// so that larger means harder.
class HardnessProfile {
public:
    HardnessProfile() = default;
    HardnessProfile(TaskKind kind, std::vector<std::string> measures, std::size_t instances);

    TaskKind kind() const noexcept { return kind_; }
    std::string_view catalog() const noexcept { return measure_catalog_version; }
    std::size_t size() const noexcept { return instances_; }
    const std::vector<std::string>& measures() const noexcept { return measures_; }

    bool has(std::string_view measure) const noexcept;
    std::vector<double>& column(std::string_view measure);
    const std::vector<double>& column(std::string_view measure) const;
    double value(std::size_t instance, std::string_view measure) const { return column(measure)[instance]; }

    // Rows reordered so that row r of the result is row order[r] of this one.
    HardnessProfile permuted(std::span<const std::size_t> order) const;

private:
    std::size_t index_of(std::string_view measure) const;

    TaskKind kind_ = TaskKind::classification;
    std::size_t instances_ = 0;
    std::vector<std::string> measures_;
    std::vector<std::vector<double>> columns_;
};

// Header `instance_id,<measures...>`, values with 9 significant digits.
void write_profile_csv(const HardnessProfile& profile, std::ostream& out);

// Reads any CSV whose first column is instance_id and whose remaining columns
// are numeric; returns column names (instance_id excluded) and values.
struct NumericTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> values; // values[column][row]

    const std::vector<double>* find(std::string_view column) const noexcept;
    std::size_t rows() const noexcept { return values.empty() ? 0 : values.front().size(); }
};
NumericTable read_instance_table(std::istream& in, std::string_view source);

} // namespace hardness
