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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace photonshift::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitCriterionFailure = 1;
inline constexpr int kExitUsageError = 2;

/// Malformed or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Everything a run depends on. Commands fill `options` with the defaults they used, so
/// the persisted copy replays the run exactly.
struct RunConfig {
    std::string command;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> shots;
    std::filesystem::path out = "out";
    int threads = 1;
    bool inject_degree_error = false;
    nlohmann::json options = nlohmann::json::object();

    nlohmann::json to_json() const;
    static RunConfig from_json(const nlohmann::json& j);
};

RunConfig load_run_config(const std::filesystem::path& path);

int cmd_verify_rules(RunConfig& config, std::ostream& log);
int cmd_vqe(RunConfig& config, std::ostream& log);
int cmd_unot(RunConfig& config, std::ostream& log);
int cmd_gradient_check(RunConfig& config, std::ostream& log);

/// Dispatches on config.command, writes run_config.json into the output directory and
/// maps errors to exit codes.
int run_command(RunConfig& config, std::ostream& log, std::ostream& err);

/// Full command-line entry point:
///   photonshift <verify-rules|vqe|unot|gradient-check> --config FILE --seed N
///               [--shots N] [--out DIR] [--threads N] [--inject-degree-error]
int run_cli(int argc, const char* const* argv, std::ostream& log, std::ostream& err);

}  // namespace photonshift::cli
