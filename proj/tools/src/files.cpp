// SPDX-License-Identifier: Apache-2.0

#include "hardness/app/files.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hardness/errors.hpp"

namespace hardness::app {

namespace fs = std::filesystem;

void write_file_atomic(const fs::path& path, std::string_view contents)
{
    static std::atomic<unsigned> counter{0};
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw Error("cannot write '" + path.string() + "'");
        }
    }
    fs::rename(tmp, path);
}

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw SchemaError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string manifest_json(const std::vector<ManifestEntry>& entries)
{
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json item;
        item["name"] = e.name;
        item["parameter"] = e.parameter;
        item["seed"] = e.seed;
        item["path"] = e.path;
        j.push_back(item);
    }
    return j.dump(2) + "\n";
}

std::vector<ManifestEntry> read_manifest(const fs::path& path)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("manifest '" + path.string() + "': " + e.what());
    }
    if (!j.is_array()) {
        throw SchemaError("manifest '" + path.string() + "': expected a JSON array");
    }
    std::vector<ManifestEntry> out;
    for (const auto& item : j) {
        try {
            out.push_back({item.at("name").get<std::string>(), item.at("parameter").get<double>(),
                           item.at("seed").get<std::uint64_t>(), item.at("path").get<std::string>()});
        } catch (const nlohmann::json::exception& e) {
            throw SchemaError("manifest '" + path.string() + "': " + e.what());
        }
    }
    return out;
}

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs)
{
    std::vector<fs::path> out;
    for (const auto& text : inputs) {
        const fs::path p(text);
        if (fs::is_directory(p)) {
            std::vector<fs::path> found;
            for (const auto& entry : fs::directory_iterator(p)) {
                const auto name = entry.path().filename().string();
                const bool output = name.ends_with(".profile.csv") || name.ends_with(".ih.csv");
                if (entry.is_regular_file() && entry.path().extension() == ".csv" && !output) {
                    found.push_back(entry.path());
                }
            }
            std::sort(found.begin(), found.end());
            out.insert(out.end(), found.begin(), found.end());
        } else if (p.extension() == ".json") {
            for (const auto& e : read_manifest(p)) {
                out.push_back(p.parent_path() / e.path);
            }
        } else {
            out.push_back(p);
        }
    }
    return out;
}

} // namespace hardness::app
