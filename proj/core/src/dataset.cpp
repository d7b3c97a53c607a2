// SPDX-License-Identifier: Apache-2.0

#include "hardness/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <unordered_map>

#include <json.hpp>

#include "hardness/csv.hpp"
#include "hardness/errors.hpp"

namespace hardness {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows)
{
    if (rows.empty()) {
        return {};
    }
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) {
            throw ParameterError("Matrix::from_rows: ragged rows");
        }
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

std::vector<double> Matrix::column(std::size_t c) const
{
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

void Matrix::set_column(std::size_t c, std::span<const double> values)
{
    assert(values.size() == rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        (*this)(r, c) = values[r];
    }
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const
{
    Matrix out(indices.size(), cols_);
    for (std::size_t r = 0; r < indices.size(); ++r) {
        auto src = row(indices[r]);
        std::copy(src.begin(), src.end(), out.row(r).begin());
    }
    return out;
}

std::string_view to_string(TaskKind kind) noexcept
{
    return kind == TaskKind::classification ? "classification" : "regression";
}

TaskKind parse_task_kind(std::string_view text)
{
    if (text == "classification") {
        return TaskKind::classification;
    }
    if (text == "regression") {
        return TaskKind::regression;
    }
    throw ParameterError("unknown task kind '" + std::string(text) + "' (expected classification or regression)");
}

Labels Labels::from_strings(std::span<const std::string> values)
{
    Labels labels;
    labels.index.reserve(values.size());
    std::unordered_map<std::string, int> seen;
    for (const auto& v : values) {
        auto [it, inserted] = seen.try_emplace(v, static_cast<int>(labels.names.size()));
        if (inserted) {
            labels.names.push_back(v);
        }
        labels.index.push_back(it->second);
    }
    return labels;
}

std::vector<std::size_t> Labels::counts() const
{
    std::vector<std::size_t> out(names.size(), 0);
    for (int c : index) {
        ++out[static_cast<std::size_t>(c)];
    }
    return out;
}

Dataset::Dataset(std::string name, std::vector<std::string> feature_names, Matrix features,
                 std::string target_name, Target target)
    : name_(std::move(name))
    , feature_names_(std::move(feature_names))
    , features_(std::move(features))
    , target_name_(std::move(target_name))
    , target_(std::move(target))
{
    if (features_.cols() == 0) {
        throw ValidationError("dataset '" + name_ + "' has no feature columns");
    }
    if (feature_names_.empty()) {
        for (std::size_t c = 0; c < features_.cols(); ++c) {
            feature_names_.push_back("x" + std::to_string(c));
        }
    }
    if (feature_names_.size() != features_.cols()) {
        throw ValidationError("dataset '" + name_ + "': feature name count does not match column count");
    }
    const std::size_t target_size = std::visit([](const auto& t) { return t.size(); }, target_);
    if (target_size != features_.rows()) {
        throw ValidationError("dataset '" + name_ + "': target length does not match row count");
    }
    for (double v : features_.values()) {
        if (!std::isfinite(v)) {
            throw ValidationError("dataset '" + name_ + "' contains a non-finite feature value");
        }
    }
    if (const auto* labels = std::get_if<Labels>(&target_)) {
        if (labels->class_count() < 2) {
            throw ValidationError("dataset '" + name_ + "': classification target needs at least 2 classes");
        }
    } else {
        for (double v : std::get<std::vector<double>>(target_)) {
            if (!std::isfinite(v)) {
                throw ValidationError("dataset '" + name_ + "' contains a non-finite response");
            }
        }
    }
}

Dataset Dataset::classification(std::string name, Matrix features, std::span<const std::string> labels)
{
    return Dataset(std::move(name), {}, std::move(features), "class", Labels::from_strings(labels));
}

Dataset Dataset::regression(std::string name, Matrix features, std::vector<double> responses)
{
    return Dataset(std::move(name), {}, std::move(features), "y", std::move(responses));
}

TaskKind Dataset::kind() const noexcept
{
    return std::holds_alternative<Labels>(target_) ? TaskKind::classification : TaskKind::regression;
}

const Labels& Dataset::labels() const
{
    if (const auto* l = std::get_if<Labels>(&target_)) {
        return *l;
    }
    throw ValidationError("dataset '" + name_ + "' has a continuous target, not class labels");
}

const std::vector<double>& Dataset::responses() const
{
    if (const auto* r = std::get_if<std::vector<double>>(&target_)) {
        return *r;
    }
    throw ValidationError("dataset '" + name_ + "' has class labels, not a continuous target");
}

Dataset Dataset::with_name(std::string name) const
{
    Dataset copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

Dataset Dataset::permuted(std::span<const std::size_t> order) const
{
    Matrix features = features_.select_rows(order);
    if (const auto* l = std::get_if<Labels>(&target_)) {
        std::vector<std::string> names;
        names.reserve(order.size());
        for (auto i : order) {
            names.push_back(l->name_of(i));
        }
        return Dataset(name_, feature_names_, std::move(features), target_name_, Labels::from_strings(names));
    }
    const auto& y = std::get<std::vector<double>>(target_);
    std::vector<double> ys;
    ys.reserve(order.size());
    for (auto i : order) {
        ys.push_back(y[i]);
    }
    return Dataset(name_, feature_names_, std::move(features), target_name_, std::move(ys));
}

TargetSpec TargetSpec::parse(std::string_view text)
{
    TargetSpec spec;
    spec.name = std::string(text);
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), idx);
    if (ec == std::errc() && ptr == text.data() + text.size()) {
        spec.index = idx;
    }
    return spec;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_finite(std::string_view text, double& out)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size() && std::isfinite(out);
}

std::size_t resolve_target(const std::vector<std::string>& header, const TargetSpec& spec)
{
    if (spec.name) {
        auto it = std::find(header.begin(), header.end(), *spec.name);
        if (it != header.end()) {
            return static_cast<std::size_t>(it - header.begin());
        }
    }
    if (spec.index) {
        if (*spec.index >= header.size()) {
            throw SchemaError("target column index " + std::to_string(*spec.index) + " out of range (" +
                              std::to_string(header.size()) + " columns)");
        }
        return *spec.index;
    }
    if (spec.name) {
        throw SchemaError("target column '" + *spec.name + "' not found in header");
    }
    return header.size() - 1;
}

} // namespace

Dataset read_csv(std::istream& in, const TargetSpec& target, TaskKind kind, std::string name)
{
    auto rows = csv::parse(in);
    if (rows.empty()) {
        throw SchemaError("csv '" + name + "': missing header row");
    }
    const auto header = std::move(rows.front());
    if (header.size() < 2) {
        throw SchemaError("csv '" + name + "': need at least one feature column and a target column");
    }
    const std::size_t target_col = resolve_target(header, target);
    const std::size_t n = rows.size() - 1;
    const std::size_t m = header.size() - 1;

    std::vector<std::string> feature_names;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c != target_col) {
            feature_names.push_back(header[c]);
        }
    }

    Matrix features(n, m);
    std::vector<std::string> raw_labels;
    std::vector<double> responses;
    for (std::size_t r = 0; r < n; ++r) {
        const auto& row = rows[r + 1];
        const std::size_t data_row = r + 1;
        if (row.size() != header.size()) {
            throw IngestionError(data_row, "", "csv '" + name + "': row " + std::to_string(data_row) + " has " +
                                                   std::to_string(row.size()) + " fields, header has " +
                                                   std::to_string(header.size()));
        }
        std::size_t f = 0;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c == target_col) {
                if (kind == TaskKind::classification) {
                    raw_labels.push_back(row[c]);
                } else {
                    double v = 0;
                    if (!parse_finite(row[c], v)) {
                        throw IngestionError(data_row, header[c],
                                             "csv '" + name + "': row " + std::to_string(data_row) + ", column '" +
                                                 header[c] + "': '" + row[c] + "' is not a finite real");
                    }
                    responses.push_back(v);
                }
                continue;
            }
            double v = 0;
            if (!parse_finite(row[c], v)) {
                throw IngestionError(data_row, header[c],
                                     "csv '" + name + "': row " + std::to_string(data_row) + ", column '" + header[c] +
                                         "': '" + row[c] + "' is not a finite real");
            }
            features(r, f++) = v;
        }
    }

    if (kind == TaskKind::classification) {
        auto labels = Labels::from_strings(raw_labels);
        if (labels.class_count() < 2) {
            throw ValidationError("csv '" + name + "': classification target '" + header[target_col] +
                                  "' has fewer than 2 classes");
        }
        return Dataset(std::move(name), std::move(feature_names), std::move(features), header[target_col],
                       std::move(labels));
    }
    return Dataset(std::move(name), std::move(feature_names), std::move(features), header[target_col],
                   std::move(responses));
}

Dataset load_csv(const std::filesystem::path& path, const TargetSpec& target, TaskKind kind)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw SchemaError("cannot open '" + path.string() + "'");
    }
    return read_csv(in, target, kind, path.stem().string());
}

void write_csv(const Dataset& ds, std::ostream& out)
{
    for (const auto& name : ds.feature_names()) {
        out << csv::escape(name) << ',';
    }
    out << csv::escape(ds.target_name()) << '\n';
    const auto& x = ds.features();
    for (std::size_t r = 0; r < ds.size(); ++r) {
        for (std::size_t c = 0; c < ds.dims(); ++c) {
            out << csv::format_real(x(r, c), 17) << ',';
        }
        if (ds.kind() == TaskKind::classification) {
            out << csv::escape(ds.labels().name_of(r));
        } else {
            out << csv::format_real(ds.responses()[r], 17);
        }
        out << '\n';
    }
}

void write_csv(const Dataset& ds, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    write_csv(ds, out);
}

std::string dataset_sidecar_json(const Dataset& ds)
{
    nlohmann::ordered_json j;
    j["name"] = ds.name();
    j["n"] = ds.size();
    j["m"] = ds.dims();
    j["kind"] = std::string(to_string(ds.kind()));
    j["target"] = ds.target_name();
    if (ds.kind() == TaskKind::classification) {
        const auto& labels = ds.labels();
        auto counts = labels.counts();
        nlohmann::ordered_json cc = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < labels.class_count(); ++c) {
            cc[labels.names[c]] = counts[c];
        }
        j["class_counts"] = cc;
    } else {
        j["class_counts"] = nullptr;
    }
    return j.dump(2) + "\n";
}

} // namespace hardness
