// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hardness/dataset.hpp"

namespace hardness::app {

enum ExitCode : int { exit_ok = 0, exit_partial = 1, exit_config = 2 };

// Everything a command reads besides its input files. Serialised with every
// default written out, so a saved config replays the run exactly.
struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::string out;
    TaskKind kind = TaskKind::classification;
    std::uint64_t seed = 0;
    std::size_t folds = 10;
    std::vector<std::string> measures; // empty: whole catalog
    std::size_t hb_bins = 10;
    double de_quantile = 0.15;
    std::size_t k = 5;
    std::size_t min_leaf_dcp = 5;
    bool force = false;
    bool dump_cfe_trace = false;
    std::string target; // empty: last column

    // gen
    std::size_t n = 500;
    std::vector<double> params; // empty: default sweep for the kind

    // ih
    std::size_t pool_size = 5;

    // report
    std::string manifest;
    std::string profiles_dir; // empty: manifest directory
    std::string ih_dir;       // empty: manifest directory

    // Throws ParameterError on an out-of-range or inconsistent field.
    void validate() const;

    std::string to_json() const;
    static RunConfig from_json(std::string_view text);

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

} // namespace hardness::app
