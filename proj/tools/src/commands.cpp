// SPDX-License-Identifier: Apache-2.0

#include "hardness/app/commands.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hardness/app/files.hpp"
#include "hardness/app/report.hpp"
#include "hardness/csv.hpp"
#include "hardness/errors.hpp"
#include "hardness/hm_class.hpp"
#include "hardness/hm_reg.hpp"
#include "hardness/ih.hpp"
#include "hardness/parallel.hpp"
#include "hardness/profile.hpp"
#include "hardness/rng.hpp"
#include "hardness/synth.hpp"

namespace hardness::app {

namespace fs = std::filesystem;

namespace {

TargetSpec target_of(const RunConfig& c)
{
    return c.target.empty() ? TargetSpec::last() : TargetSpec::parse(c.target);
}

void save_config(const RunConfig& c)
{
    write_file_atomic(fs::path(c.out) / "run_config.json", c.to_json());
}

// Runs `job` for every input, dataset-parallel, and reports failures in input
// order once all have finished.
int for_each_input(const RunConfig& c, std::ostream& err,
                   const std::function<void(const fs::path& input)>& job)
{
    const auto inputs = expand_inputs(c.inputs);
    if (inputs.empty()) {
        err << "error: no input datasets found\n";
        return exit_config;
    }
    std::vector<std::string> failures(inputs.size());
    parallel_for(inputs.size(), [&](std::size_t i) {
        try {
            job(inputs[i]);
        } catch (const std::exception& e) {
            failures[i] = e.what();
        }
    });
    int status = exit_ok;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (!failures[i].empty()) {
            err << "error: " << inputs[i].string() << ": " << failures[i] << '\n';
            status = exit_partial;
        }
    }
    return status;
}

std::string format9(double v) { return csv::format_real(v, 9); }

// Requested measures in catalog order.
std::vector<std::string> measure_selection(const RunConfig& c)
{
    if (c.measures.empty()) {
        return {};
    }
    std::string joined;
    for (const auto& m : c.measures) {
        joined += (joined.empty() ? "" : ",") + m;
    }
    return parse_measure_list(joined, c.kind);
}

} // namespace

int cmd_gen(const RunConfig& c, std::ostream& err)
{
    const fs::path out(c.out);
    if (fs::exists(out) && !(fs::is_directory(out) && fs::is_empty(out)) && !c.force) {
        err << "error: output '" << c.out << "' already exists; pass --force to overwrite\n";
        return exit_config;
    }
    SweepSpec spec = c.kind == TaskKind::classification ? SweepSpec::default_classification()
                                                        : SweepSpec::default_regression();
    spec.n = c.n;
    spec.base_seed = c.seed;
    if (!c.params.empty()) {
        spec.parameters = c.params;
    }
    spec.validate();
    const auto sweep = gen_sweep(spec);

    std::vector<ManifestEntry> manifest;
    for (const auto& member : sweep) {
        const auto& ds = member.dataset;
        std::ostringstream body;
        write_csv(ds, body);
        write_file_atomic(out / (ds.name() + ".csv"), body.str());
        write_file_atomic(out / (ds.name() + ".meta.json"), dataset_sidecar_json(ds));
        manifest.push_back({ds.name(), member.parameter, member.seed, ds.name() + ".csv"});
    }
    write_file_atomic(out / "manifest.json", manifest_json(manifest));
    save_config(c);
    return exit_ok;
}

int cmd_measure(const RunConfig& c, std::ostream& err)
{
    fs::create_directories(c.out);
    save_config(c);
    const auto measures = measure_selection(c);
    return for_each_input(c, err, [&](const fs::path& input) {
        const auto ds = load_csv(input, target_of(c), c.kind);
        const std::string stem = input.stem().string();
        HardnessProfile profile;
        if (c.kind == TaskKind::classification) {
            ClassificationOptions opts;
            opts.k = c.k;
            opts.dcp_min_leaf = c.min_leaf_dcp;
            opts.de_quantile = c.de_quantile;
            profile = classification_profile(ds, opts, measures);
        } else {
            RegressionOptions opts;
            opts.k = c.k;
            opts.hb_bins = c.hb_bins;
            opts.de_quantile = c.de_quantile;
            CfeTrace trace;
            profile = regression_profile(ds, opts, measures, &trace);
            if (c.dump_cfe_trace && profile.has("CFE")) {
                write_file_atomic(fs::path(c.out) / (stem + ".cfe.json"), trace.to_json());
            }
        }
        std::ostringstream body;
        write_profile_csv(profile, body);
        write_file_atomic(fs::path(c.out) / (stem + ".profile.csv"), body.str());
    });
}

int cmd_ih(const RunConfig& c, std::ostream& err)
{
    fs::create_directories(c.out);
    save_config(c);
    return for_each_input(c, err, [&](const fs::path& input) {
        const auto ds = load_csv(input, target_of(c), c.kind);
        const std::string stem = input.stem().string();
        const auto pool = default_pool(c.kind, c.seed).truncated(c.pool_size);
        const auto plan = make_cv_plan(ds, c.folds, c.seed);
        const auto result = instance_hardness(ds, pool, plan);

        std::ostringstream body;
        body << "instance_id,ih";
        for (const auto& name : result.learners) {
            body << ',' << csv::escape(name);
        }
        body << '\n';
        std::vector<std::vector<double>> columns;
        for (std::size_t j = 0; j < result.learners.size(); ++j) {
            columns.push_back(result.learner_column(j, ds));
        }
        for (std::size_t i = 0; i < ds.size(); ++i) {
            body << i << ',' << format9(result.ih[i]);
            for (const auto& col : columns) {
                body << ',' << format9(col[i]);
            }
            body << '\n';
        }
        write_file_atomic(fs::path(c.out) / (stem + ".ih.csv"), body.str());

        nlohmann::ordered_json meta;
        meta["dataset"] = ds.name();
        meta["kind"] = std::string(to_string(ds.kind()));
        meta["n"] = ds.size();
        meta["pool"] = result.learners;
        meta["folds"] = result.folds;
        meta["requested_folds"] = c.folds;
        meta["stratified"] = plan.stratified;
        meta["seed"] = c.seed;
        meta["gamma"] = ds.kind() == TaskKind::regression ? nlohmann::ordered_json(result.gamma)
                                                          : nlohmann::ordered_json(nullptr);
        meta["rng"] = std::string(SplitMix64::name);
        write_file_atomic(fs::path(c.out) / (stem + ".ih.json"), meta.dump(2) + "\n");
    });
}

int cmd_report(const RunConfig& c, std::ostream& err)
{
    const fs::path manifest_path(c.manifest.empty() ? c.inputs.front() : c.manifest);
    const auto entries = read_manifest(manifest_path);
    const fs::path base = manifest_path.parent_path();
    const fs::path profiles = c.profiles_dir.empty() ? base : fs::path(c.profiles_dir);
    const fs::path ih_dir = c.ih_dir.empty() ? base : fs::path(c.ih_dir);

    int status = exit_ok;
    std::vector<SweepInput> inputs;
    for (const auto& e : entries) {
        const auto profile_path = profiles / (e.name + ".profile.csv");
        const auto ih_path = ih_dir / (e.name + ".ih.csv");
        try {
            for (const auto& p : {profile_path, ih_path}) {
                if (!fs::exists(p)) {
                    throw SchemaError("missing input '" + p.string() + "'");
                }
            }
            std::istringstream profile_text(read_file(profile_path));
            const auto table = read_instance_table(profile_text, profile_path.string());
            std::istringstream ih_text(read_file(ih_path));
            const auto ih = read_instance_table(ih_text, ih_path.string());
            const auto* ih_col = ih.find("ih");
            if (ih_col == nullptr) {
                throw SchemaError("'" + ih_path.string() + "' has no ih column");
            }
            if (ih_col->size() != table.rows()) {
                throw SchemaError("'" + ih_path.string() + "' and '" + profile_path.string() +
                                  "' disagree on the instance count");
            }
            SweepInput in{e.name, e.parameter, e.seed, table.columns, table.values};
            in.measures.push_back("IH");
            in.columns.push_back(*ih_col);
            inputs.push_back(std::move(in));
        } catch (const std::exception& ex) {
            err << "error: dataset '" << e.name << "': " << ex.what() << '\n';
            status = exit_partial;
        }
    }
    if (inputs.empty()) {
        err << "error: no complete dataset to report on\n";
        return exit_partial;
    }

    const auto report = build_report(c.kind, inputs);
    const fs::path out(c.out);
    write_file_atomic(out / "report.json", report.to_json());
    write_file_atomic(out / "summary.csv", report.summary_csv());
    write_file_atomic(out / "trend.csv", report.trend_csv());
    const std::string x_label = c.kind == TaskKind::classification ? "sd" : "sigma";
    for (std::size_t m = 0; m < report.measures.size(); ++m) {
        const auto& measure = report.measures[m];
        std::vector<BoxSeries> series;
        for (const auto& in : inputs) {
            const auto it = std::find(in.measures.begin(), in.measures.end(), measure);
            if (it == in.measures.end()) {
                continue;
            }
            series.push_back({csv::format_real(in.parameter, 6),
                              box_stats(in.columns[static_cast<std::size_t>(it - in.measures.begin())])});
        }
        write_file_atomic(out / ("boxplot_" + measure + ".svg"), boxplot_svg(measure, x_label, series));
    }
    save_config(c);
    return status;
}

int run(const RunConfig& c, std::ostream& err)
{
    try {
        c.validate();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_config;
    }
    try {
        if (c.command == "gen") {
            return cmd_gen(c, err);
        }
        if (c.command == "measure") {
            return cmd_measure(c, err);
        }
        if (c.command == "ih") {
            return cmd_ih(c, err);
        }
        return cmd_report(c, err);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return exit_config;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_partial;
    }
}

} // namespace hardness::app
