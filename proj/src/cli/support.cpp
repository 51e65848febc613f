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

#include "support.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

namespace photonshift::cli {

OptimizerOptions optimizer_options(RunConfig& config, const OptimizerOptions& defaults) {
    auto& o = config.options;
    if (!o.contains("optimizer")) o["optimizer"] = nlohmann::json::object();
    auto& j = o["optimizer"];
    if (!j.is_object()) throw ConfigError("optimizer must be a JSON object");
    OptimizerOptions out = defaults;
    const auto read = [&](const char* key, auto& field) {
        if (!j.contains(key)) {
            j[key] = field;
            return;
        }
        try {
            j.at(key).get_to(field);
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("optimizer.") + key + ": " + e.what());
        }
    };
    read("max_iter", out.max_iter);
    read("grad_tol", out.grad_tol);
    read("c1", out.c1);
    read("c2", out.c2);
    read("max_line_search", out.max_line_search);
    read("max_line_search_failures", out.max_line_search_failures);
    if (out.max_iter < 0 || out.grad_tol < 0 || !(out.c1 > 0 && out.c1 < out.c2 && out.c2 < 1)) {
        throw ConfigError("optimizer options out of range (need 0 < c1 < c2 < 1)");
    }
    return out;
}

void CsvTable::add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

void CsvTable::write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    const auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
}

std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fmt(std::uint64_t v) { return std::to_string(v); }
std::string fmt(int v) { return std::to_string(v); }

void write_json(const nlohmann::json& j, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

CsvTable trace_table(const OptimizerTrace& trace, const std::vector<std::string>& names) {
    std::vector<std::string> header{"iteration", "cost", "grad_norm", "evaluations"};
    header.insert(header.end(), names.begin(), names.end());
    CsvTable t(std::move(header));
    for (const auto& it : trace.iterates) {
        std::vector<std::string> row{fmt(it.iteration), fmt(it.cost), fmt(it.grad_norm), fmt(it.evaluations)};
        for (double v : it.params) row.push_back(fmt(v));
        t.add(std::move(row));
    }
    return t;
}

void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
}

}  // namespace photonshift::cli
