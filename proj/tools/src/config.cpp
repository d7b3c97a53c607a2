// SPDX-License-Identifier: Apache-2.0

#include "hardness/app/config.hpp"

#include <algorithm>

#include <json.hpp>

#include "hardness/errors.hpp"
#include "hardness/profile.hpp"

namespace hardness::app {

namespace {

const std::vector<std::string> commands = {"gen", "measure", "ih", "report"};

} // namespace

void RunConfig::validate() const
{
    if (std::find(commands.begin(), commands.end(), command) == commands.end()) {
        throw ParameterError("unknown command '" + command + "'");
    }
    if (out.empty()) {
        throw ParameterError("--out is required");
    }
    if ((command == "measure" || command == "ih") && inputs.empty()) {
        throw ParameterError(command + ": no input files given");
    }
    if (command == "report" && manifest.empty() && inputs.empty()) {
        throw ParameterError("report: a sweep manifest is required");
    }
    if (folds < 2) {
        throw ParameterError("--folds must be at least 2");
    }
    if (k < 1) {
        throw ParameterError("--k must be at least 1");
    }
    if (hb_bins < 1) {
        throw ParameterError("--hb-bins must be at least 1");
    }
    if (!(de_quantile > 0.0 && de_quantile <= 1.0)) {
        throw ParameterError("--de-quantile must lie in (0, 1]");
    }
    if (min_leaf_dcp < 1) {
        throw ParameterError("--min-leaf-dcp must be at least 1");
    }
    if (pool_size < 1 || pool_size > 5) {
        throw ParameterError("--pool-size must be between 1 and 5");
    }
    if (n < 10) {
        throw ParameterError("--n must be at least 10");
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (!(params[i] > 0.0) || (i > 0 && params[i] <= params[i - 1])) {
            throw ParameterError("--params must be positive and strictly ascending");
        }
    }
    if (!measures.empty()) {
        std::string joined;
        for (const auto& m : measures) {
            joined += (joined.empty() ? "" : ",") + m;
        }
        (void)parse_measure_list(joined, kind);
    }
}

std::string RunConfig::to_json() const
{
    nlohmann::ordered_json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["out"] = out;
    j["kind"] = std::string(to_string(kind));
    j["seed"] = seed;
    j["folds"] = folds;
    j["measures"] = measures;
    j["hb_bins"] = hb_bins;
    j["de_quantile"] = de_quantile;
    j["k"] = k;
    j["min_leaf_dcp"] = min_leaf_dcp;
    j["force"] = force;
    j["dump_cfe_trace"] = dump_cfe_trace;
    j["target"] = target;
    j["n"] = n;
    j["params"] = params;
    j["pool_size"] = pool_size;
    j["manifest"] = manifest;
    j["profiles_dir"] = profiles_dir;
    j["ih_dir"] = ih_dir;
    return j.dump(2) + "\n";
}

RunConfig RunConfig::from_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) {
        throw ParameterError("config: expected a JSON object");
    }
    RunConfig c;
    auto take = [&](const char* key, auto& field) {
        if (j.contains(key)) {
            try {
                j.at(key).get_to(field);
            } catch (const nlohmann::json::exception&) {
                throw ParameterError(std::string("config: field '") + key + "' has the wrong type");
            }
        }
    };
    take("command", c.command);
    take("inputs", c.inputs);
    take("out", c.out);
    if (j.contains("kind")) {
        c.kind = parse_task_kind(j["kind"].get<std::string>());
    }
    take("seed", c.seed);
    take("folds", c.folds);
    take("measures", c.measures);
    take("hb_bins", c.hb_bins);
    take("de_quantile", c.de_quantile);
    take("k", c.k);
    take("min_leaf_dcp", c.min_leaf_dcp);
    take("force", c.force);
    take("dump_cfe_trace", c.dump_cfe_trace);
    take("target", c.target);
    take("n", c.n);
    take("params", c.params);
    take("pool_size", c.pool_size);
    take("manifest", c.manifest);
    take("profiles_dir", c.profiles_dir);
    take("ih_dir", c.ih_dir);
    return c;
}

} // namespace hardness::app
