// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hardness::app {

// Writes to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

std::string read_file(const std::filesystem::path& path);

struct ManifestEntry {
    std::string name;
    double parameter = 0.0;
    std::uint64_t seed = 0;
    std::string path; // relative to the manifest's directory
};

std::string manifest_json(const std::vector<ManifestEntry>& entries);
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

// Expands command inputs: a manifest (*.json) lists its datasets, a directory
// contributes its *.csv files in name order (skipping *.profile.csv and
// *.ih.csv outputs), anything else is taken as a file.
std::vector<std::filesystem::path> expand_inputs(const std::vector<std::string>& inputs);

} // namespace hardness::app
