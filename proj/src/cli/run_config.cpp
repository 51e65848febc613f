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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "photonshift/cli.hpp"
#include "photonshift/error.hpp"
#include "support.hpp"

namespace photonshift::cli {

namespace {

const char* const kCommands[] = {"verify-rules", "vqe", "unot", "gradient-check"};

bool known_command(const std::string& c) {
    for (const char* k : kCommands) {
        if (c == k) return true;
    }
    return false;
}

}  // namespace

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["seed"] = seed;
    j["shots"] = shots ? nlohmann::json(*shots) : nlohmann::json(nullptr);
    j["out"] = out.generic_string();
    j["threads"] = threads;
    j["inject_degree_error"] = inject_degree_error;
    j["options"] = options;
    return j;
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    RunConfig c;
    try {
        if (j.contains("command")) c.command = j.at("command").get<std::string>();
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("shots") && !j.at("shots").is_null()) c.shots = j.at("shots").get<std::uint64_t>();
        if (j.contains("out")) c.out = j.at("out").get<std::string>();
        if (j.contains("threads")) c.threads = j.at("threads").get<int>();
        if (j.contains("inject_degree_error")) c.inject_degree_error = j.at("inject_degree_error").get<bool>();
        if (j.contains("options")) c.options = j.at("options");
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!c.options.is_object()) throw ConfigError("config: options must be an object");
    return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config " + path.string() + ": " + e.what());
    }
    return RunConfig::from_json(j);
}

int run_command(RunConfig& config, std::ostream& log, std::ostream& err) {
    try {
        if (!known_command(config.command)) throw ConfigError("unknown command '" + config.command + "'");
        if (config.threads < 1) throw ConfigError("--threads must be at least 1");
        if (config.shots && *config.shots == 0) throw ConfigError("--shots must be positive");
        ensure_directory(config.out);
        int code = kExitSuccess;
        if (config.command == "verify-rules") code = cmd_verify_rules(config, log);
        if (config.command == "vqe") code = cmd_vqe(config, log);
        if (config.command == "unot") code = cmd_unot(config, log);
        if (config.command == "gradient-check") code = cmd_gradient_check(config, log);
        write_json(config.to_json(), config.out / "run_config.json");
        return code;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const ContractError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCriterionFailure;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& log, std::ostream& err) {
    CLI::App app{"Exact parameter-shift rules for linear-optical circuits", "photonshift"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
    std::optional<std::string> out;
    std::optional<int> threads;
    bool inject = false;

    for (const char* name : kCommands) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("--seed", seed, "master seed (overrides the config)");
        sub->add_option("--shots", shots, "shots per evaluation; exact probabilities when omitted");
        sub->add_option("--out", out, "output directory");
        sub->add_option("--threads", threads, "worker threads");
        sub->add_flag("--inject-degree-error", inject, "use degree R - 1 (gradient-check negative control)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        log << app.help();
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return kExitUsageError;
    }

    RunConfig config;
    try {
        config = load_run_config(config_path);
        std::ifstream in(config_path);
        if (!seed && !nlohmann::json::parse(in).contains("seed")) {
            throw ConfigError("no seed: pass --seed or set \"seed\" in the config");
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitUsageError;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    if (!config.command.empty() && config.command != command) {
        err << "config error: config is for '" << config.command << "', not '" << command << "'\n";
        return kExitUsageError;
    }
    config.command = command;
    if (seed) config.seed = *seed;
    if (shots) config.shots = *shots;
    if (out) config.out = *out;
    if (threads) config.threads = *threads;
    if (inject) config.inject_degree_error = true;
    return run_command(config, log, err);
}

}  // namespace photonshift::cli
