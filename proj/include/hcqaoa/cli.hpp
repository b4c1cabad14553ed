// Copyright 2026 The hcqaoa Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "circuit.hpp"
#include "engine.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "hamiltonian.hpp"
#include "ising.hpp"
#include "optimizer.hpp"
#include "qubo.hpp"
#include "rational.hpp"
#include "solve.hpp"

namespace hcqaoa::cli {

inline constexpr std::string_view kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;

/// Everything a command needs. Output paths are not part of the manifest.
struct Options {
    std::string command;

    std::optional<std::string> graph_path;
    std::optional<std::string> terms_path;
    nlohmann::json graph_doc;
    nlohmann::json terms_doc;

    std::string weight = "1";
    std::optional<std::string> weights;

    bool drop_constant = false;
    bool keep_constant = false;
    bool normalize = false;
    std::optional<std::string> rescale;
    bool raw = false;
    bool levels = false;

    std::optional<std::size_t> layers;
    std::string mixer = "rx";
    std::optional<std::string> noise;
    std::uint64_t shots = kDefaultShots;
    std::uint64_t seed = 0;
    bool sampled_objective = false;
    std::uint64_t objective_shots = 1000;

    std::optional<std::size_t> max_evals;
    std::size_t restarts = 4;
    double xtol = 1e-4;
    double ftol = 1e-6;
    double step = 0.3;

    std::string axis = "mixer";
    std::string mixers = "rx,ry";
    std::size_t runs = 10;

    std::optional<std::string> out;
    std::optional<std::string> csv;
    std::optional<std::string> trace;
};

namespace detail {

inline std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorKind::MalformedInput, "cannot read '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_text(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        fail(ErrorKind::MalformedInput, "cannot write '" + path + "'");
    }
}

inline nlohmann::json parse_json(const std::string &text, const std::string &what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        fail(ErrorKind::MalformedInput, what + ": " + e.what());
    }
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const auto end = s.find(sep, pos);
        out.emplace_back(s.substr(pos, end - pos));
        if (end == std::string_view::npos) {
            return out;
        }
        pos = end + 1;
    }
}

inline PenaltyWeights penalty_weights(const Options &o) {
    if (!o.weights) {
        return PenaltyWeights::uniform(parse_rational(o.weight));
    }
    const auto parts = split(*o.weights, ',');
    if (parts.size() != 3) {
        fail(ErrorKind::MalformedInput, "--weights expects vertex,position,edge");
    }
    return {parse_rational(parts[0]), parse_rational(parts[1]),
            parse_rational(parts[2])};
}

inline nlohmann::json noise_to_json(const NoiseModel &nm) {
    return {{"p1", nm.p1}, {"p2", nm.p2}, {"readout", nm.readout}};
}

inline std::string noise_to_string(const NoiseModel &nm) {
    std::ostringstream os;
    os.precision(15);
    os << "p1=" << nm.p1 << ",p2=" << nm.p2 << ",ro=" << nm.readout;
    return os.str();
}

inline constexpr std::string_view kDefaultNoise = "p1=0.001,p2=0.01,ro=0.01";

} // namespace detail

/// The cost model a command operates on.
struct Problem {
    std::optional<Graph> graph;
    std::optional<IsingModel> ising;
    DiagonalHamiltonian hamiltonian;
};

/// Graph input compiles to the normalized model (integer coefficients, no
/// constant) unless raw is set; a term list is used as given.
inline Problem load_problem(const Options &o) {
    if (!o.graph_doc.is_null() && !o.terms_doc.is_null()) {
        fail(ErrorKind::MalformedInput, "give either --graph or --terms, not both");
    }
    if (!o.graph_doc.is_null()) {
        Graph g = parse_graph(o.graph_doc.dump());
        IsingModel m = compile(g, detail::penalty_weights(o));
        if (!o.raw) {
            m = normalized(m);
        }
        DiagonalHamiltonian h(m);
        return {std::move(g), std::move(m), std::move(h)};
    }
    if (!o.terms_doc.is_null()) {
        return {std::nullopt, std::nullopt, term_list_from_json(o.terms_doc)};
    }
    fail(ErrorKind::MalformedInput, "missing --graph or --terms");
}

/// Loads input files and fills every default that depends on the problem.
inline Options resolve(Options o) {
    if (o.graph_path && o.graph_doc.is_null()) {
        o.graph_doc = detail::parse_json(detail::read_text(*o.graph_path), *o.graph_path);
    }
    if (o.terms_path && o.terms_doc.is_null()) {
        o.terms_doc = detail::parse_json(detail::read_text(*o.terms_path), *o.terms_path);
    }
    if (o.drop_constant && o.keep_constant) {
        fail(ErrorKind::InvalidArgument, "--drop-constant and --keep-constant conflict");
    }
    if (o.normalize && o.rescale) {
        fail(ErrorKind::InvalidArgument, "--normalize and --rescale conflict");
    }
    o.mixer = std::string(to_string(parse_mixer(o.mixer)));
    if (o.noise) {
        o.noise = detail::noise_to_string(parse_noise(*o.noise));
    }
    if (o.command == "solve" || o.command == "compare") {
        if (!o.layers) {
            o.layers = load_problem(o).hamiltonian.num_qubits() <= 4 ? 2 : 8;
        }
        if (!o.max_evals) {
            o.max_evals = std::max<std::size_t>(1, 2500 * *o.layers);
        }
    }
    if (o.command == "compare") {
        if (o.axis != "mixer" && o.axis != "noise") {
            fail(ErrorKind::InvalidArgument, "--axis must be mixer or noise");
        }
        if (o.axis == "mixer") {
            const auto parts = detail::split(o.mixers, ',');
            if (parts.size() != 2) {
                fail(ErrorKind::InvalidArgument, "--mixers expects two mixers");
            }
            o.mixers = std::string(to_string(parse_mixer(parts[0]))) + "," +
                       std::string(to_string(parse_mixer(parts[1])));
        } else if (!o.noise) {
            o.noise = detail::noise_to_string(parse_noise(detail::kDefaultNoise));
        }
        if (o.runs < 1) {
            fail(ErrorKind::InvalidArgument, "--runs must be >= 1");
        }
    }
    return o;
}

inline nlohmann::json manifest(const Options &o) {
    nlohmann::json m = {{"tool", "hcqaoa"},
                        {"version", std::string(kVersion)},
                        {"command", o.command}};
    if (!o.graph_doc.is_null()) {
        m["graph"] = {{"path", o.graph_path.value_or("")}, {"data", o.graph_doc}};
        if (o.weights) {
            m["weights"] = *o.weights;
        } else {
            m["weight"] = o.weight;
        }
    }
    if (!o.terms_doc.is_null()) {
        m["terms"] = {{"path", o.terms_path.value_or("")}, {"data", o.terms_doc}};
    }
    if (o.command == "compile") {
        m["drop_constant"] = o.drop_constant;
        m["keep_constant"] = o.keep_constant;
        m["normalize"] = o.normalize;
        if (o.rescale) {
            m["rescale"] = *o.rescale;
        }
    }
    if (o.command == "spectrum") {
        m["raw"] = o.raw;
        m["levels"] = o.levels;
    }
    if (o.command == "solve" || o.command == "compare") {
        m["raw"] = o.raw;
        m["p"] = o.layers.value_or(0);
        m["mixer"] = o.mixer;
        m["noise"] = o.noise ? nlohmann::json(*o.noise) : nlohmann::json(nullptr);
        m["shots"] = o.shots;
        m["seed"] = o.seed;
        m["sampled_objective"] = o.sampled_objective;
        m["objective_shots"] = o.objective_shots;
        m["optimizer"] = {{"method", "nelder-mead"},
                          {"max_evals", o.max_evals.value_or(0)},
                          {"restarts", o.restarts},
                          {"xtol", o.xtol},
                          {"ftol", o.ftol},
                          {"initial_step", o.step},
                          {"bounds", {0.0, 2.0 * std::numbers::pi}}};
    }
    if (o.command == "compare") {
        m["axis"] = o.axis;
        m["runs"] = o.runs;
        if (o.axis == "mixer") {
            m["mixers"] = o.mixers;
        }
    }
    return m;
}

/// Inverse of manifest(); the result resolves to the same manifest.
inline Options from_manifest(const nlohmann::json &doc) {
    const nlohmann::json &m = doc.contains("manifest") ? doc["manifest"] : doc;
    try {
        if (!m.is_object() || m.value("tool", "") != "hcqaoa") {
            fail(ErrorKind::MalformedInput, "not an hcqaoa manifest");
        }
        Options o;
        o.command = m.at("command").get<std::string>();
        if (m.contains("graph")) {
            o.graph_path = m["graph"].at("path").get<std::string>();
            o.graph_doc = m["graph"].at("data");
        }
        if (m.contains("terms")) {
            o.terms_path = m["terms"].at("path").get<std::string>();
            o.terms_doc = m["terms"].at("data");
        }
        o.weight = m.value("weight", o.weight);
        if (m.contains("weights")) {
            o.weights = m["weights"].get<std::string>();
        }
        o.drop_constant = m.value("drop_constant", false);
        o.keep_constant = m.value("keep_constant", false);
        o.normalize = m.value("normalize", false);
        if (m.contains("rescale")) {
            o.rescale = m["rescale"].get<std::string>();
        }
        o.raw = m.value("raw", false);
        o.levels = m.value("levels", false);
        if (m.contains("p")) {
            o.layers = m["p"].get<std::size_t>();
        }
        o.mixer = m.value("mixer", o.mixer);
        if (m.contains("noise") && !m["noise"].is_null()) {
            o.noise = m["noise"].get<std::string>();
        }
        o.shots = m.value("shots", o.shots);
        o.seed = m.value("seed", o.seed);
        o.sampled_objective = m.value("sampled_objective", false);
        o.objective_shots = m.value("objective_shots", o.objective_shots);
        if (m.contains("optimizer")) {
            const auto &opt = m["optimizer"];
            o.max_evals = opt.at("max_evals").get<std::size_t>();
            o.restarts = opt.at("restarts").get<std::size_t>();
            o.xtol = opt.at("xtol").get<double>();
            o.ftol = opt.at("ftol").get<double>();
            o.step = opt.at("initial_step").get<double>();
        }
        o.axis = m.value("axis", o.axis);
        o.mixers = m.value("mixers", o.mixers);
        o.runs = m.value("runs", o.runs);
        return o;
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::MalformedInput, std::string("bad manifest: ") + e.what());
    }
}

inline SolveConfig solve_config(const Options &o) {
    SolveConfig cfg;
    cfg.layers = o.layers.value_or(2);
    cfg.mixer = parse_mixer(o.mixer);
    if (o.noise) {
        cfg.noise = parse_noise(*o.noise);
    }
    cfg.shots = o.shots;
    cfg.sampled_objective = o.sampled_objective;
    cfg.objective_shots = o.objective_shots;
    cfg.optimizer.max_evals = o.max_evals.value_or(5000);
    cfg.optimizer.restarts = o.restarts;
    cfg.optimizer.xtol = o.xtol;
    cfg.optimizer.ftol = o.ftol;
    cfg.optimizer.initial_step = o.step;
    cfg.optimizer.seed = o.seed;
    cfg.optimizer.validate();
    return cfg;
}

// Commands -------------------------------------------------------------------

struct Output {
    std::string json;
    std::optional<std::string> csv;
    std::optional<std::string> trace;
};

inline Output cmd_compile(const Options &o) {
    if (o.graph_doc.is_null()) {
        fail(ErrorKind::MalformedInput, "compile needs --graph");
    }
    const Graph g = parse_graph(o.graph_doc.dump());
    IsingModel m = compile(g, detail::penalty_weights(o));
    if (o.normalize) {
        m = normalized(m);
    } else if (o.rescale) {
        m = strip_constant(m, parse_rational(*o.rescale));
    } else if (o.drop_constant) {
        m = strip_constant(m);
    }
    auto doc = term_list_to_json(m, o.keep_constant, !o.keep_constant && !o.drop_constant);
    doc["manifest"] = manifest(o);
    return {doc.dump(2) + "\n", std::nullopt, std::nullopt};
}

inline Output cmd_spectrum(const Options &o) {
    const auto problem = load_problem(o);
    const auto s = full_spectrum(problem.hamiltonian);
    auto doc = spectrum_to_json(s, o.levels);
    doc["manifest"] = manifest(o);
    std::ostringstream csv;
    csv.precision(15);
    csv << "level,energy,bitstring\n";
    for (std::size_t l = 0; l < s.levels.size(); ++l) {
        for (const auto &bits : s.levels[l].states) {
            csv << l << ',' << s.levels[l].energy << ',' << bits << '\n';
        }
    }
    return {doc.dump(2) + "\n", csv.str(), std::nullopt};
}

inline nlohmann::json outcome_json(const Problem &problem, const Distribution &d,
                                   const std::string &bits, std::uint64_t count) {
    nlohmann::json row = {{"bitstring", bits},
                          {"count", count},
                          {"probability", d.probability(bits)},
                          {"energy", energy_of(problem.hamiltonian, Assignment(bits))}};
    if (problem.graph) {
        const auto tour = decode(Assignment(bits), *problem.graph);
        row["tour"] = tour.valid() ? nlohmann::json(tour.order) : nlohmann::json(nullptr);
    }
    return row;
}

inline nlohmann::json report_json(const Problem &problem, const SolveReport &r,
                                  std::size_t top) {
    nlohmann::json outcomes = nlohmann::json::array();
    const auto ranked = r.final_distribution.ranked();
    for (std::size_t i = 0; i < std::min(top, ranked.size()); ++i) {
        outcomes.push_back(
            outcome_json(problem, r.final_distribution, ranked[i].first, ranked[i].second));
    }
    return {{"num_qubits", problem.hamiltonian.num_qubits()},
            {"gamma", r.gamma},
            {"beta", r.beta},
            {"best_value", r.optimization.best_value},
            {"evals_used", r.optimization.evals_used},
            {"converged", r.optimization.converged},
            {"best_restart", r.optimization.best_restart},
            {"ground_energy", r.ground_energy},
            {"ground_states", r.ground_states},
            {"ground_state_mass", r.ground_state_mass},
            {"expectation_final", r.expectation_final},
            {"exact_expectation", r.exact_expectation},
            {"sampled_energy", r.sampled_energy},
            {"shots", r.final_distribution.shots},
            {"top_outcomes", outcomes}};
}

inline Output cmd_solve(const Options &o) {
    const auto problem = load_problem(o);
    const auto report = qaoa_solve(problem.hamiltonian, solve_config(o));
    nlohmann::json doc = {{"manifest", manifest(o)},
                          {"result", report_json(problem, report, 8)}};
    const std::set<std::string> ground(report.ground_states.begin(),
                                       report.ground_states.end());
    std::ostringstream csv;
    csv.precision(15);
    csv << "bitstring,count,probability,energy,ground\n";
    for (const auto &[bits, count] : report.final_distribution.counts) {
        csv << bits << ',' << count << ',' << report.final_distribution.probability(bits)
            << ',' << energy_of(problem.hamiltonian, Assignment(bits)) << ','
            << (ground.contains(bits) ? 1 : 0) << '\n';
    }
    std::ostringstream trace;
    trace.precision(15);
    trace << "eval,value\n";
    for (const auto &t : report.optimization.trace) {
        trace << t.eval << ',' << t.value << '\n';
    }
    return {doc.dump(2) + "\n", csv.str(), trace.str()};
}

/// Paired runs on shared seeds along one axis; no direction is asserted.
inline Output cmd_compare(const Options &o) {
    const auto problem = load_problem(o);
    std::vector<std::string> labels;
    std::vector<SolveConfig> configs;
    const SolveConfig base = solve_config(o);
    if (o.axis == "mixer") {
        for (const auto &name : detail::split(o.mixers, ',')) {
            SolveConfig cfg = base;
            cfg.mixer = parse_mixer(name);
            labels.push_back(name);
            configs.push_back(cfg);
        }
    } else {
        SolveConfig clean = base;
        clean.noise.reset();
        labels = {"noiseless", "noisy"};
        configs = {clean, base};
    }
    // Identical labels still get distinct CSV columns.
    if (labels[0] == labels[1]) {
        labels[0] += "_a";
        labels[1] += "_b";
    }

    nlohmann::json runs = nlohmann::json::array();
    std::ostringstream csv;
    csv.precision(15);
    csv << "seed,bitstring,energy," << labels[0] << ',' << labels[1] << '\n';
    std::array<double, 2> mass_total{};
    std::array<std::size_t, 2> wins{};
    for (std::size_t k = 0; k < o.runs; ++k) {
        const std::uint64_t seed = o.seed + k;
        nlohmann::json run = {{"seed", seed}};
        std::array<Distribution, 2> dists;
        std::array<double, 2> mass{};
        for (std::size_t side = 0; side < 2; ++side) {
            SolveConfig cfg = configs[side];
            cfg.optimizer.seed = seed;
            const auto r = qaoa_solve(problem.hamiltonian, cfg);
            run[labels[side]] = report_json(problem, r, 4);
            mass[side] = r.ground_state_mass;
            mass_total[side] += r.ground_state_mass;
            dists[side] = r.final_distribution;
        }
        if (mass[0] != mass[1]) {
            ++wins[mass[0] > mass[1] ? 0 : 1];
        }
        std::set<std::string> keys;
        for (const auto &d : dists) {
            for (const auto &kv : d.counts) {
                keys.insert(kv.first);
            }
        }
        for (const auto &bits : keys) {
            csv << seed << ',' << bits << ','
                << energy_of(problem.hamiltonian, Assignment(bits)) << ','
                << dists[0].probability(bits) << ',' << dists[1].probability(bits) << '\n';
        }
        runs.push_back(std::move(run));
    }
    const double n = static_cast<double>(o.runs);
    nlohmann::json summary = {
        {"mean_ground_state_mass",
         {{labels[0], mass_total[0] / n}, {labels[1], mass_total[1] / n}}},
        {"higher_mass_count", {{labels[0], wins[0]}, {labels[1], wins[1]}}},
        {"ties", o.runs - wins[0] - wins[1]}};
    nlohmann::json doc = {{"manifest", manifest(o)},
                          {"axis", o.axis},
                          {"labels", labels},
                          {"runs", runs},
                          {"summary", summary}};
    return {doc.dump(2) + "\n", csv.str(), std::nullopt};
}

inline Output execute(const Options &resolved) {
    const auto &c = resolved.command;
    if (c == "compile") {
        return cmd_compile(resolved);
    }
    if (c == "spectrum") {
        return cmd_spectrum(resolved);
    }
    if (c == "solve") {
        return cmd_solve(resolved);
    }
    if (c == "compare") {
        return cmd_compare(resolved);
    }
    fail(ErrorKind::MalformedInput, "unknown command '" + c + "'");
}

inline int exit_code(const Error &e) {
    return e.kind() == ErrorKind::TooManyQubits ? kExitResource : kExitInput;
}

/// Parses argv, runs one command and writes its artifacts. Never throws.
inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Hamiltonian-cycle QAOA toolkit", "hcqaoa"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    Options o;
    std::string replay_file;
    app.add_option("--graph", o.graph_path, "graph JSON file");
    app.add_option("--terms", o.terms_path, "Pauli term-list JSON file");
    app.add_option("--out", o.out, "write the JSON report here instead of stdout");
    app.add_option("--csv", o.csv, "write the CSV table here");
    app.add_option("--seed", o.seed, "base seed");
    app.add_option("--shots", o.shots, "measurement shots");
    app.add_option("--weight", o.weight, "penalty weight A for all constraints");
    app.add_option("--weights", o.weights, "vertex,position,edge weights");
    app.add_option("--p", o.layers, "QAOA layers (default 2 up to 4 qubits, else 8)");
    app.add_option("--mixer", o.mixer, "rx or ry");
    app.add_option("--noise", o.noise, "p1=..,p2=..,ro=..");
    app.add_flag("--drop-constant", o.drop_constant, "omit the identity offset");
    app.add_flag("--keep-constant", o.keep_constant, "emit the offset as an all-I term");
    app.add_flag("--sampled-objective", o.sampled_objective,
                 "optimise the shot-sampled energy");
    app.add_flag("--raw", o.raw, "use the unnormalized compiled model");

    auto *compile = app.add_subcommand("compile", "graph -> Pauli term list");
    compile->add_flag("--normalize", o.normalize, "drop offset, scale to integers");
    compile->add_option("--rescale", o.rescale, "drop offset and multiply by this");

    auto *spectrum = app.add_subcommand("spectrum", "exact spectrum of the cost model");
    spectrum->add_flag("--levels", o.levels, "include every level in the report");

    auto add_optimizer = [&](CLI::App *sub) {
        sub->add_option("--max-evals", o.max_evals, "objective evaluations (2500*p)");
        sub->add_option("--restarts", o.restarts, "Nelder-Mead starts");
        sub->add_option("--xtol", o.xtol);
        sub->add_option("--ftol", o.ftol);
        sub->add_option("--step", o.step, "initial simplex step");
        sub->add_option("--objective-shots", o.objective_shots,
                        "shots per sampled objective evaluation");
    };
    auto *solve = app.add_subcommand("solve", "run QAOA");
    add_optimizer(solve);
    solve->add_option("--trace", o.trace, "write the optimizer trace CSV here");

    auto *compare = app.add_subcommand("compare", "paired runs along one axis");
    add_optimizer(compare);
    compare->add_option("--axis", o.axis, "mixer or noise");
    compare->add_option("--mixers", o.mixers, "two mixers for --axis mixer");
    compare->add_option("--runs", o.runs, "number of shared seeds");

    auto *replay = app.add_subcommand("replay", "rerun a saved report or manifest");
    replay->add_option("file", replay_file, "report or manifest JSON")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        Options run_options = o;
        if (replay->parsed()) {
            const auto doc =
                detail::parse_json(detail::read_text(replay_file), replay_file);
            run_options = from_manifest(doc);
        } else {
            run_options.command = app.get_subcommands().front()->get_name();
        }
        const Options resolved = resolve(run_options);
        const Output result = execute(resolved);
        if (o.out) {
            detail::write_text(*o.out, result.json);
        } else {
            out << result.json;
        }
        if (o.csv && result.csv) {
            detail::write_text(*o.csv, *result.csv);
        }
        if (o.trace && result.trace) {
            detail::write_text(*o.trace, *result.trace);
        }
        return kExitOk;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e);
    } catch (const nlohmann::json::exception &e) {
        err << "error: MalformedInput: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::bad_alloc &) {
        err << "error: out of memory\n";
        return kExitResource;
    }
}

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(std::move(args), out, err);
}

} // namespace hcqaoa::cli
