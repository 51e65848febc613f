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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "photonshift/circuit_io.hpp"
#include "photonshift/cli.hpp"
#include "photonshift/degree.hpp"
#include "photonshift/error.hpp"
#include "photonshift/fourier.hpp"
#include "photonshift/integral_rule.hpp"
#include "photonshift/linear_optics.hpp"
#include "photonshift/random.hpp"
#include "photonshift/shift_rule.hpp"
#include "photonshift/unot.hpp"
#include "photonshift/vqe.hpp"
#include "support.hpp"

namespace photonshift::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::optional<std::uint64_t> shot_budget(const RunConfig& c) { return c.shots; }

// ---------------------------------------------------------------------------------------
// verify-rules

struct RuleCase {
    std::string label;
    std::string parameter;
    OccupationList output;
};

struct RuleEstimate {
    double max_derivative_error = 0.0;
    double mean = 0.0;
    double mean_error = 0.0;

    double worst() const { return std::max(max_derivative_error, mean_error); }
};

}  // namespace

int cmd_verify_rules(RunConfig& config, std::ostream& log) {
    const int grid = option(config, "grid", 256);
    const int mean_grid = option(config, "mean_grid", 1024);
    const double fd_step = option(config, "fd_step", 1e-5);
    const double tolerance = option(config, "tolerance", 1e-9);
    const double deviation = option(config, "deviation", 1e-3);
    if (grid < 1 || mean_grid < 8 || !(fd_step > 0)) throw ConfigError("verify-rules: bad grid options");

    const double min_harmonic = option(config, "min_harmonic", 1e-3);
    const int max_draws = option(config, "max_draws", 100);

    ParametricCircuit mesh = build_clements_mesh(3, "theta");
    const OccupationList input{1, 0, 1};

    // The scanned phases are the splitting phases of the three cells. Only the photon from
    // mode 0 reaches the first one; the outer phase in front of it would act on that photon
    // alone before any mixing and leave every curve flat.
    const std::vector<RuleCase> cases{{"theta1", "theta1", {1, 1, 0}},
                                      {"theta2", "theta3", {1, 1, 0}},
                                      {"theta3", "theta5", {0, 1, 1}}};

    // The phases that are not scanned are drawn at random. Draws where the top harmonic
    // of some curve nearly vanishes are not generic and are redrawn.
    std::vector<double> base;
    int draws = 0;
    for (bool generic = false; !generic; ++draws) {
        if (draws == max_draws) throw std::runtime_error("verify-rules: no generic configuration found");
        base = random_phases(mesh.parameter_count(), config.seed, "verify/phases", static_cast<std::uint64_t>(draws));
        generic = true;
        for (const auto& rc : cases) {
            const std::size_t index = mesh.parameter_index(rc.parameter);
            const int km = parameter_degree(mesh, rc.parameter, input, rc.output, base).degree;
            if (km == 0) continue;
            const FourierSeries fs = reconstruct_fourier(
                [&](double x) {
                    auto p = base;
                    p[index] = x;
                    return transition_probability(evaluate_unitary(mesh, p), input, rc.output);
                },
                km);
            const auto k = static_cast<std::size_t>(km);
            if (std::hypot(fs.a[k], fs.b[k]) < min_harmonic) generic = false;
        }
    }
    mesh.set_parameter_values(base);
    save_circuit(mesh, config.out / "circuit.json");

    CsvTable curves({"case", "parameter", "output", "x", "probability", "derivative_oracle",
                     "derivative_1photon", "derivative_2photon"});
    CsvTable verdicts({"case", "parameter", "output", "K_M", "rule", "max_derivative_error", "mean",
                       "mean_oracle", "mean_error", "correct"});
    nlohmann::json summary;
    summary["input"] = input.str();
    summary["configuration_draws"] = draws;
    summary["held_phases"] = base;
    summary["cases"] = nlohmann::json::array();
    bool all_pass = true;

    for (const auto& rc : cases) {
        const std::size_t index = mesh.parameter_index(rc.parameter);
        std::vector<double> point = base;
        const auto f = [&](double x) {
            point[index] = x;
            const double p = transition_probability(evaluate_unitary(mesh, point), input, rc.output);
            point[index] = base[index];
            return p;
        };
        const int km = parameter_degree(mesh, rc.parameter, input, rc.output, base).degree;

        double mean_oracle = 0.0;  // trapezoid on a dense periodic grid is exact here
        for (int k = 0; k < mean_grid; ++k) mean_oracle += f(2 * kPi * k / mean_grid);
        mean_oracle /= mean_grid;

        std::array<RuleEstimate, 2> est{};
        for (int r = 1; r <= 2; ++r) {
            const IntegralRule mean_rule = integral_rule(Weight::uniform(), r);
            est[r - 1].mean = integrate(f, mean_rule);
            est[r - 1].mean_error = std::abs(est[r - 1].mean - mean_oracle);
        }
        for (int k = 0; k < grid; ++k) {
            const double x = 2 * kPi * k / grid;
            const double oracle = (f(x + fd_step) - f(x - fd_step)) / (2 * fd_step);
            const double d1 = shift_derivative(f, x, 1);
            const double d2 = shift_derivative(f, x, 2);
            est[0].max_derivative_error = std::max(est[0].max_derivative_error, std::abs(d1 - oracle));
            est[1].max_derivative_error = std::max(est[1].max_derivative_error, std::abs(d2 - oracle));
            curves.add({rc.label, rc.parameter, rc.output.str(), fmt(x), fmt(f(x)), fmt(oracle), fmt(d1), fmt(d2)});
        }

        nlohmann::json jc;
        jc["case"] = rc.label;
        jc["parameter"] = rc.parameter;
        jc["output"] = rc.output.str();
        jc["K_M"] = km;
        jc["mean_oracle"] = mean_oracle;
        bool case_pass = true;
        for (int r = 1; r <= 2; ++r) {
            const auto& e = est[r - 1];
            const bool correct = e.worst() <= tolerance;
            const bool incorrect = e.worst() > deviation;
            // the R-photon rule is exact exactly when at most R photons cross the phase
            const bool expect_correct = km <= r;
            const bool ok = expect_correct ? correct : incorrect;
            case_pass = case_pass && ok;
            const std::string rule = std::to_string(r) + "-photon";
            verdicts.add({rc.label, rc.parameter, rc.output.str(), fmt(km), rule, fmt(e.max_derivative_error),
                          fmt(e.mean), fmt(mean_oracle), fmt(e.mean_error), correct ? "1" : "0"});
            jc[rule] = {{"max_derivative_error", e.max_derivative_error},
                        {"mean", e.mean},
                        {"mean_error", e.mean_error},
                        {"correct", correct},
                        {"expected_correct", expect_correct},
                        {"as_expected", ok}};
            log << "verify-rules " << rc.label << " (" << rc.parameter << ", output " << rc.output.str()
                << ", K_M=" << km << ") " << rule << ": max |error| " << e.worst() << " -> "
                << (correct ? "correct" : "incorrect") << (ok ? "" : " [UNEXPECTED]") << '\n';
        }
        jc["pass"] = case_pass;
        summary["cases"].push_back(jc);
        all_pass = all_pass && case_pass;
    }
    summary["pass"] = all_pass;
    curves.write(config.out / "verify_rules_curves.csv");
    verdicts.write(config.out / "verify_rules.csv");
    write_json(summary, config.out / "verify_rules_summary.json");
    return all_pass ? kExitSuccess : kExitCriterionFailure;
}

// ---------------------------------------------------------------------------------------
// vqe

namespace {

PauliHamiltonian hamiltonian_option(RunConfig& config) {
    const PauliHamiltonian d = PauliHamiltonian::hydrogen();
    const nlohmann::json fallback{{"alpha", d.alpha}, {"beta", d.beta}, {"gamma", d.gamma},
                                  {"delta", d.delta}, {"mu", d.mu}};
    const auto j = option(config, "hamiltonian", fallback);
    PauliHamiltonian h;
    try {
        h.alpha = j.at("alpha").get<double>();
        h.beta = j.at("beta").get<double>();
        h.gamma = j.at("gamma").get<double>();
        h.delta = j.at("delta").get<double>();
        h.mu = j.at("mu").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("hamiltonian: ") + e.what());
    }
    for (double v : {h.alpha, h.beta, h.gamma, h.delta, h.mu}) {
        if (!std::isfinite(v)) throw ConfigError("hamiltonian coefficients must be finite");
    }
    return h;
}

CsvTable starts_table(const MultiStartResult& r) {
    CsvTable t({"start", "final_cost", "exact_cost", "status", "iterations", "evaluations"});
    for (std::size_t i = 0; i < r.starts.size(); ++i) {
        const auto& s = r.starts[i];
        t.add({fmt(static_cast<std::uint64_t>(i)), fmt(s.trace.final().cost), fmt(s.exact_cost),
               to_string(s.trace.status), fmt(s.trace.final().iteration), fmt(s.trace.evaluations)});
    }
    return t;
}

nlohmann::json run_json(const MultiStartResult& r) {
    const auto& best = r.starts[r.best];
    std::uint64_t evaluations = 0;
    for (const auto& s : r.starts) evaluations += s.trace.evaluations;
    return {{"best_start", r.best},
            {"final_cost", r.cost},
            {"exact_cost_at_final", r.exact_cost},
            {"status", to_string(best.trace.status)},
            {"iterations", best.trace.final().iteration},
            {"evaluations_best_start", best.trace.evaluations},
            {"evaluations_total", evaluations},
            {"params", best.trace.final().params}};
}

}  // namespace

int cmd_vqe(RunConfig& config, std::ostream& log) {
    const PauliHamiltonian h = hamiltonian_option(config);
    const int variational = option(config, "variational_phases", 9);
    VqeProblem problem = make_vqe_problem(h, variational);
    if (config.inject_degree_error) problem.count_degree -= 1;

    MultiStartOptions ms;
    ms.starts = option(config, "starts", 20);
    ms.shots = shot_budget(config);
    ms.threads = config.threads;
    OptimizerOptions defaults;
    if (ms.shots) {
        defaults.max_iter = 100;
        defaults.grad_tol = 1e-3;
    }
    ms.optimizer = optimizer_options(config, defaults);
    const int repeats = ms.shots ? option(config, "repeats", 10) : 1;
    const double tolerance = option(config, "tolerance", ms.shots ? 0.02 : 1e-3);
    if (ms.starts < 1 || repeats < 1) throw ConfigError("vqe: starts and repeats must be positive");

    const double ground = ground_energy(h);
    const auto names = problem.ansatz.parameter_names();
    nlohmann::json summary;
    summary["exact_ground_energy"] = ground;
    summary["shots"] = ms.shots ? nlohmann::json(*ms.shots) : nlohmann::json(nullptr);
    summary["hamiltonian"] = config.options["hamiltonian"];
    summary["runs"] = nlohmann::json::array();

    std::vector<double> finals;
    for (int r = 0; r < repeats; ++r) {
        const std::uint64_t seed = ms.shots ? derive_seed(config.seed, "vqe/run", static_cast<std::uint64_t>(r))
                                            : derive_seed(config.seed, "vqe/run", 0);
        const MultiStartResult res = run_vqe(problem, seed, ms);
        finals.push_back(res.cost);
        const std::string suffix = repeats > 1 ? "_run" + std::to_string(r) : "";
        trace_table(res.starts[res.best].trace, names).write(config.out / ("vqe_trace" + suffix + ".csv"));
        starts_table(res).write(config.out / ("vqe_starts" + suffix + ".csv"));
        auto jr = run_json(res);
        jr["run"] = r;
        summary["runs"].push_back(jr);
        log << "vqe run " << r << ": E = " << res.cost << " Ha (exact at final point " << res.exact_cost
            << ", status " << to_string(res.starts[res.best].trace.status) << ")\n";
    }
    double mean = 0.0;
    for (double v : finals) mean += v;
    mean /= static_cast<double>(finals.size());
    double var = 0.0;
    for (double v : finals) var += (v - mean) * (v - mean);
    const double stddev = finals.size() > 1 ? std::sqrt(var / static_cast<double>(finals.size() - 1)) : 0.0;

    const double gap = mean - ground;
    const bool pass = std::abs(gap) <= tolerance;
    summary["final_energy"] = mean;
    summary["final_energy_std"] = stddev;
    summary["final_energy_stderr"] = stddev / std::sqrt(static_cast<double>(finals.size()));
    summary["gap"] = gap;
    summary["tolerance"] = tolerance;
    summary["pass"] = pass;
    write_json(summary, config.out / "vqe_summary.json");
    log << "vqe: final " << mean << " +- " << stddev << " Ha, exact ground " << ground << ", gap " << gap
        << (pass ? " (pass)" : " (FAIL)") << '\n';
    return pass ? kExitSuccess : kExitCriterionFailure;
}

// ---------------------------------------------------------------------------------------
// unot

int cmd_unot(RunConfig& config, std::ostream& log) {
    UnotProblem problem = make_unot_problem();
    if (config.inject_degree_error) problem.degree_offset = -1;

    MultiStartOptions ms;
    ms.starts = option(config, "starts", 5);
    ms.shots = shot_budget(config);
    ms.threads = config.threads;
    OptimizerOptions defaults;
    if (ms.shots) {
        defaults.max_iter = 100;
        defaults.grad_tol = 1e-3;
    }
    ms.optimizer = optimizer_options(config, defaults);
    const auto n_states = option<std::uint64_t>(config, "fidelity_states", 1000);
    const int bins = option(config, "histogram_bins", 20);
    const double cost_tolerance = option(config, "cost_tolerance", ms.shots ? 0.02 : 1e-3);
    const double fid_low = option(config, "fidelity_low", 0.655);
    const double fid_high = option(config, "fidelity_high", 0.677);
    const int tensor_points = option(config, "tensor_check_points", 20);
    if (n_states < 1 || bins < 1 || ms.starts < 1) throw ConfigError("unot: bad options");

    const MultiStartResult res = run_unot(problem, derive_seed(config.seed, "unot/run", 0), ms);
    const auto& best = res.starts[res.best];
    const auto& theta = best.trace.final().params;
    trace_table(best.trace, problem.variational).write(config.out / "unot_trace.csv");
    starts_table(res).write(config.out / "unot_starts.csv");

    const FidelityTest fid =
        unot_fidelity_test(problem, theta, n_states, derive_seed(config.seed, "unot/fidelity", 0), bins);
    CsvTable hist({"bin_low", "bin_high", "count"});
    for (std::size_t b = 0; b < fid.histogram.size(); ++b) {
        hist.add({fmt(fid.bin_edges[b]), fmt(fid.bin_edges[b + 1]), fmt(fid.histogram[b])});
    }
    hist.write(config.out / "unot_fidelity_histogram.csv");

    double tensor_diff = 0.0;
    for (int i = 0; i < tensor_points; ++i) {
        const auto x = random_phases(problem.variational.size(), config.seed, "unot/tensor", static_cast<std::uint64_t>(i));
        tensor_diff = std::max(tensor_diff, std::abs(unot_cost(problem, x) - unot_cost_tensor(problem, x)));
    }

    const double bound = -2.0 / 3.0;
    const bool cost_ok = std::abs(res.cost - bound) <= cost_tolerance;
    const bool fid_ok = fid.mean >= fid_low && fid.mean <= fid_high;
    const bool tensor_ok = tensor_diff <= 1e-10;
    nlohmann::json summary = run_json(res);
    summary["quantum_bound"] = bound;
    summary["cost_tolerance"] = cost_tolerance;
    summary["cost_pass"] = cost_ok;
    summary["fidelity"] = {{"states", n_states},
                           {"mean", fid.mean},
                           {"standard_error", fid.standard_error},
                           {"band", {fid_low, fid_high}},
                           {"pass", fid_ok}};
    summary["six_point_vs_tensor_max_diff"] = tensor_diff;
    summary["tensor_pass"] = tensor_ok;
    summary["pass"] = cost_ok && fid_ok && tensor_ok;
    write_json(summary, config.out / "unot_summary.json");
    log << "unot: cost " << res.cost << " (bound " << bound << ")" << (cost_ok ? "" : " FAIL") << "; fidelity "
        << fid.mean << " +- " << fid.standard_error << (fid_ok ? "" : " FAIL") << "; six-point vs tensor "
        << tensor_diff << (tensor_ok ? "" : " FAIL") << '\n';
    return summary["pass"].get<bool>() ? kExitSuccess : kExitCriterionFailure;
}

// ---------------------------------------------------------------------------------------
// gradient-check

namespace {

struct CheckTarget {
    std::vector<std::string> names;  // every parameter, declaration order
    std::vector<std::size_t> checked;
    std::size_t dimension = 0;
    std::function<double(std::span<const double>)> cost;
    std::function<std::vector<double>(std::span<const double>)> grad;
};

CheckTarget circuit_target(RunConfig& config) {
    const auto path = option<std::string>(config, "circuit", "");
    if (path.empty()) throw ConfigError("gradient-check: problem 'circuit' needs a circuit file");
    auto circuit = std::make_shared<ParametricCircuit>(load_circuit(path));
    const auto in = option<std::vector<int>>(config, "input", {});
    const auto out = option<std::vector<int>>(config, "output", {});
    auto input = std::make_shared<OccupationList>(std::vector<int>(in));
    auto output = std::make_shared<OccupationList>(std::vector<int>(out));
    if (input->mode_count() != static_cast<std::size_t>(circuit->mode_count()) ||
        output->mode_count() != input->mode_count() || input->photon_count() != output->photon_count()) {
        throw ConfigError("gradient-check: input/output must match the circuit modes and each other");
    }
    const auto names = option<std::vector<std::string>>(config, "parameters", circuit->parameter_names());
    for (const auto& n : names) {
        if (!circuit->has_parameter(n)) throw ConfigError("gradient-check: unknown parameter " + n);
    }
    const int offset = config.inject_degree_error ? -1 : 0;

    CheckTarget t;
    t.names = circuit->parameter_names();
    for (const auto& n : names) t.checked.push_back(circuit->parameter_index(n));
    t.dimension = circuit->parameter_count();
    t.cost = [=](std::span<const double> x) {
        return transition_probability(evaluate_unitary(*circuit, x), *input, *output);
    };
    t.grad = [=, cost = t.cost](std::span<const double> x) {
        std::vector<int> degrees;
        for (const auto& n : names) {
            const int r = parameter_degree(*circuit, n, *input, *output, x).degree;
            degrees.push_back(r > 0 ? std::max(0, r + offset) : 0);
        }
        const auto g = gradient(*circuit, cost, x, names, degrees);
        std::vector<double> full(x.size(), 0.0);
        for (std::size_t i = 0; i < names.size(); ++i) full[circuit->parameter_index(names[i])] = g[i];
        return full;
    };
    return t;
}

}  // namespace

int cmd_gradient_check(RunConfig& config, std::ostream& log) {
    const auto problem_name = option<std::string>(config, "problem", "vqe");
    const int points = option(config, "points", 50);
    const double h = option(config, "fd_step", 1e-6);
    const double tolerance = option(config, "tolerance", 1e-6);
    if (points < 1 || !(h > 0)) throw ConfigError("gradient-check: bad points or fd_step");

    CheckTarget t;
    if (problem_name == "vqe") {
        auto p = std::make_shared<VqeProblem>(make_vqe_problem(hamiltonian_option(config), option(config, "variational_phases", 9)));
        if (config.inject_degree_error) p->count_degree -= 1;
        t.names = p->ansatz.parameter_names();
        t.dimension = t.names.size();
        for (std::size_t i = 0; i < t.dimension; ++i) t.checked.push_back(i);
        t.cost = [p](std::span<const double> x) { return vqe_energy(*p, x); };
        t.grad = [p](std::span<const double> x) { return vqe_gradient(*p, x); };
    } else if (problem_name == "unot") {
        auto p = std::make_shared<UnotProblem>(make_unot_problem());
        if (config.inject_degree_error) p->degree_offset = -1;
        t.names = p->variational;
        t.dimension = t.names.size();
        for (std::size_t i = 0; i < t.dimension; ++i) t.checked.push_back(i);
        t.cost = [p](std::span<const double> x) { return unot_cost(*p, x); };
        t.grad = [p](std::span<const double> x) { return unot_gradient(*p, x); };
    } else if (problem_name == "circuit") {
        t = circuit_target(config);
    } else {
        throw ConfigError("gradient-check: unknown problem '" + problem_name + "'");
    }

    CsvTable table({"point", "parameter", "shift_rule", "finite_difference", "abs_diff"});
    double worst = 0.0;
    for (int k = 0; k < points; ++k) {
        const auto x = random_phases(t.dimension, config.seed, "gradient-check/point", static_cast<std::uint64_t>(k));
        const auto g = t.grad(x);
        std::vector<double> xp = x;
        for (std::size_t i : t.checked) {
            xp[i] = x[i] + h;
            const double fp = t.cost(xp);
            xp[i] = x[i] - h;
            const double fm = t.cost(xp);
            xp[i] = x[i];
            const double fd = (fp - fm) / (2 * h);
            const double diff = std::abs(g[i] - fd);
            worst = std::max(worst, diff);
            table.add({fmt(k), t.names[i], fmt(g[i]), fmt(fd), fmt(diff)});
        }
    }
    const bool pass = worst <= tolerance;
    table.write(config.out / "gradient_check.csv");
    write_json({{"problem", problem_name},
                {"points", points},
                {"fd_step", h},
                {"max_abs_diff", worst},
                {"tolerance", tolerance},
                {"inject_degree_error", config.inject_degree_error},
                {"pass", pass}},
               config.out / "gradient_check.json");
    log << "gradient-check " << problem_name << ": max |shift - fd| = " << worst << (pass ? " (pass)" : " (FAIL)")
        << '\n';
    return pass ? kExitSuccess : kExitCriterionFailure;
}

}  // namespace photonshift::cli
