// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hardness/matrix.hpp"

namespace hardness {

enum class TaskKind { classification, regression };

std::string_view to_string(TaskKind kind) noexcept;
TaskKind parse_task_kind(std::string_view text);

// Categorical target. Class indices follow first-appearance order, so the
// same label column always yields the same encoding.
struct Labels {
    std::vector<int> index;
    std::vector<std::string> names;

    static Labels from_strings(std::span<const std::string> values);

    std::size_t size() const noexcept { return index.size(); }
    std::size_t class_count() const noexcept { return names.size(); }
    std::vector<std::size_t> counts() const;
    const std::string& name_of(std::size_t instance) const { return names[static_cast<std::size_t>(index[instance])]; }

    friend bool operator==(const Labels&, const Labels&) = default;
};

using Target = std::variant<Labels, std::vector<double>>;

// Tabular dataset: n instances x m numeric features plus one target column.
// Immutable once built; instance ids are 0-based row indices.
class Dataset {
public:
    Dataset(std::string name, std::vector<std::string> feature_names, Matrix features,
            std::string target_name, Target target);

    static Dataset classification(std::string name, Matrix features, std::span<const std::string> labels);
    static Dataset regression(std::string name, Matrix features, std::vector<double> responses);

    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return features_.rows(); }
    std::size_t dims() const noexcept { return features_.cols(); }
    TaskKind kind() const noexcept;

    const Matrix& features() const noexcept { return features_; }
    const std::vector<std::string>& feature_names() const noexcept { return feature_names_; }
    const std::string& target_name() const noexcept { return target_name_; }
    const Target& target() const noexcept { return target_; }

    // Throw ValidationError when the target has the other kind.
    const Labels& labels() const;
    const std::vector<double>& responses() const;

    Dataset with_name(std::string name) const;
    // Rows reordered so that row r of the result is row order[r] of this one.
    Dataset permuted(std::span<const std::size_t> order) const;

private:
    std::string name_;
    std::vector<std::string> feature_names_;
    Matrix features_;
    std::string target_name_;
    Target target_;
};

// Which column holds the target: by header name, by 0-based index, or the
// last column when neither is given.
struct TargetSpec {
    std::optional<std::string> name;
    std::optional<std::size_t> index;

    static TargetSpec last() { return {}; }
    static TargetSpec by_name(std::string n) { return {std::move(n), std::nullopt}; }
    static TargetSpec by_index(std::size_t i) { return {std::nullopt, i}; }
    // A header name if one matches at load time, otherwise an integer index.
    static TargetSpec parse(std::string_view text);
};

Dataset load_csv(const std::filesystem::path& path, const TargetSpec& target, TaskKind kind);
Dataset read_csv(std::istream& in, const TargetSpec& target, TaskKind kind, std::string name);

// Features in header order, target last; reals printed with 17 significant
// digits so a reload is exact.
void write_csv(const Dataset& ds, std::ostream& out);
void write_csv(const Dataset& ds, const std::filesystem::path& path);

// {name, n, m, kind, target, class_counts}
std::string dataset_sidecar_json(const Dataset& ds);

} // namespace hardness
