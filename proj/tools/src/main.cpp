// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include <CLI11.hpp>

#include "hardness/app/commands.hpp"
#include "hardness/app/files.hpp"
#include "hardness/errors.hpp"

using hardness::app::RunConfig;

namespace {

struct Flags {
    std::string config_path;
    std::vector<std::string> inputs;
    std::string out;
    std::string kind;
    std::uint64_t seed = 0;
    std::size_t folds = 10;
    std::vector<std::string> measures;
    std::size_t hb_bins = 10;
    double de_quantile = 0.15;
    std::size_t k = 5;
    std::size_t min_leaf_dcp = 5;
    bool force = false;
    bool dump_cfe_trace = false;
    std::string target;
    std::size_t n = 500;
    std::vector<double> params;
    std::size_t pool_size = 5;
    std::string manifest;
    std::string profiles_dir;
    std::string ih_dir;
};

// Registers the shared flags; `options` collects them so the caller can tell
// which ones were given explicitly.
void add_common(CLI::App* sub, Flags& f, std::map<std::string, CLI::Option*>& options)
{
    options["config"] = sub->add_option("--config", f.config_path, "Load a saved run_config.json first");
    options["out"] = sub->add_option("--out,-o", f.out, "Output directory");
    options["kind"] = sub->add_option("--kind", f.kind, "classification or regression")
                          ->check(CLI::IsMember({"classification", "regression"}));
    options["seed"] = sub->add_option("--seed", f.seed, "Base seed");
    options["force"] = sub->add_flag("--force", f.force, "Overwrite existing output");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Instance hardness measures for tabular data"};
    app.require_subcommand(1);
    Flags f;
    std::map<std::string, std::map<std::string, CLI::Option*>> opts;

    auto* gen = app.add_subcommand("gen", "Generate a synthetic sweep and its manifest");
    add_common(gen, f, opts["gen"]);
    opts["gen"]["n"] = gen->add_option("--n", f.n, "Instances per dataset");
    opts["gen"]["params"] = gen->add_option("--params", f.params, "sd or sigma values")->delimiter(',');

    auto* measure = app.add_subcommand("measure", "Compute hardness profiles");
    add_common(measure, f, opts["measure"]);
    opts["measure"]["inputs"] = measure->add_option("inputs", f.inputs, "CSV files, directories or manifests");
    opts["measure"]["measures"] = measure->add_option("--measures", f.measures, "Comma-separated subset")->delimiter(',');
    opts["measure"]["hb_bins"] = measure->add_option("--hb-bins", f.hb_bins, "HB histogram bins");
    opts["measure"]["de_quantile"] = measure->add_option("--de-quantile", f.de_quantile, "De distance quantile");
    opts["measure"]["k"] = measure->add_option("--k", f.k, "Neighbours for kDN and S3");
    opts["measure"]["min_leaf_dcp"] = measure->add_option("--min-leaf-dcp", f.min_leaf_dcp, "DCP tree min leaf");
    opts["measure"]["dump_cfe_trace"] = measure->add_flag("--dump-cfe-trace", f.dump_cfe_trace, "Write CFE rounds");
    opts["measure"]["target"] = measure->add_option("--target", f.target, "Target column name or index");

    auto* ih = app.add_subcommand("ih", "Compute instance hardness by cross-validation");
    add_common(ih, f, opts["ih"]);
    opts["ih"]["inputs"] = ih->add_option("inputs", f.inputs, "CSV files, directories or manifests");
    opts["ih"]["folds"] = ih->add_option("--folds", f.folds, "Cross-validation folds");
    opts["ih"]["pool_size"] = ih->add_option("--pool-size", f.pool_size, "Use the first N pool learners");
    opts["ih"]["target"] = ih->add_option("--target", f.target, "Target column name or index");

    auto* report = app.add_subcommand("report", "Summarise a sweep: JSON, CSV and SVG boxplots");
    add_common(report, f, opts["report"]);
    opts["report"]["manifest"] = report->add_option("--manifest", f.manifest, "Sweep manifest");
    opts["report"]["profiles_dir"] = report->add_option("--profiles", f.profiles_dir, "Directory of profile CSVs");
    opts["report"]["ih_dir"] = report->add_option("--ih", f.ih_dir, "Directory of IH CSVs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : hardness::app::exit_config;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    const auto& given = opts[command];
    auto set = [&](const char* name) {
        const auto it = given.find(name);
        return it != given.end() && it->second->count() > 0;
    };

    RunConfig c;
    try {
        if (set("config")) {
            c = RunConfig::from_json(hardness::app::read_file(f.config_path));
        }
        c.command = command;
        if (set("inputs")) c.inputs = f.inputs;
        if (set("out")) c.out = f.out;
        if (set("kind")) c.kind = hardness::parse_task_kind(f.kind);
        if (set("seed")) c.seed = f.seed;
        if (set("folds")) c.folds = f.folds;
        if (set("measures")) c.measures = f.measures;
        if (set("hb_bins")) c.hb_bins = f.hb_bins;
        if (set("de_quantile")) c.de_quantile = f.de_quantile;
        if (set("k")) c.k = f.k;
        if (set("min_leaf_dcp")) c.min_leaf_dcp = f.min_leaf_dcp;
        if (set("force")) c.force = f.force;
        if (set("dump_cfe_trace")) c.dump_cfe_trace = f.dump_cfe_trace;
        if (set("target")) c.target = f.target;
        if (set("n")) c.n = f.n;
        if (set("params")) c.params = f.params;
        if (set("pool_size")) c.pool_size = f.pool_size;
        if (set("manifest")) c.manifest = f.manifest;
        if (set("profiles_dir")) c.profiles_dir = f.profiles_dir;
        if (set("ih_dir")) c.ih_dir = f.ih_dir;
    } catch (const hardness::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return hardness::app::exit_config;
    }
    return hardness::app::run(c, std::cerr);
}
