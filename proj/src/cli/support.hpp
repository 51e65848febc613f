// Copyright 2026 The photonshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "photonshift/cli.hpp"
#include "photonshift/optimizer.hpp"

namespace photonshift::cli {

/// Reads options[key], inserting `fallback` when absent so the resolved value is persisted.
template <class T>
T option(RunConfig& config, const std::string& key, const T& fallback) {
    auto& o = config.options;
    if (!o.is_object()) throw ConfigError("options must be a JSON object");
    if (!o.contains(key)) {
        o[key] = fallback;
        return fallback;
    }
    try {
        return o.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("option '" + key + "': " + e.what());
    }
}

OptimizerOptions optimizer_options(RunConfig& config, const OptimizerOptions& defaults);

/// Rows of already formatted cells.
class CsvTable {
   public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
    void add(std::vector<std::string> row);
    void write(const std::filesystem::path& path) const;

   private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Shortest decimal form that parses back to the same double.
std::string fmt(double v);
std::string fmt(std::uint64_t v);
std::string fmt(int v);

void write_json(const nlohmann::json& j, const std::filesystem::path& path);

/// Trace columns: iteration, cost, grad_norm, evaluations, then one column per parameter.
CsvTable trace_table(const OptimizerTrace& trace, const std::vector<std::string>& names);

void ensure_directory(const std::filesystem::path& dir);

}  // namespace photonshift::cli
