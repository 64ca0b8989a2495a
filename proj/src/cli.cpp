// Copyright 2026 The fqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fqa/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fqa/hamiltonians.hpp"
#include "fqa/oracle.hpp"

namespace fqa::cli {

namespace {

std::string_view command_name(Command c) {
    switch (c) {
    case Command::run:
        return "run";
    case Command::sweep:
        return "sweep";
    case Command::oracle:
        return "oracle";
    }
    return "?";
}

RescaleSpec parse_variant(const std::string &text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) {
        parts.push_back(part);
    }
    const auto family = parts.empty() ? std::nullopt : parse_rescale_family(parts[0]);
    if (!family) {
        throw UsageError(fmt::format("--variant '{}': unknown rescaling family", text));
    }
    if (*family == RescaleFamily::identity) {
        if (parts.size() != 1) {
            throw UsageError(fmt::format("--variant '{}': identity takes no parameters", text));
        }
        return RescaleSpec::identity();
    }
    if (parts.size() != 3) {
        throw UsageError(fmt::format("--variant '{}': expected FAMILY:A:TF", text));
    }
    RescaleSpec spec{*family, 0.0, 0.0};
    try {
        std::size_t used = 0;
        spec.a = std::stod(parts[1], &used);
        if (used != parts[1].size()) {
            throw std::invalid_argument("trailing characters");
        }
        spec.t_f = std::stod(parts[2], &used);
        if (used != parts[2].size()) {
            throw std::invalid_argument("trailing characters");
        }
    } catch (const std::logic_error &) {
        throw UsageError(fmt::format("--variant '{}': non-numeric parameter", text));
    }
    if (!(spec.a > 0.0)) {
        throw UsageError(fmt::format("--variant '{}': a must be positive", text));
    }
    if (!(spec.t_f > 0.0)) {
        throw UsageError(fmt::format("--variant '{}': tf must be positive", text));
    }
    return spec;
}

} // namespace

CliConfig parse_args(const std::vector<std::string> &args) {
    CliConfig cfg;
    CLI::App app{"Feedback-based quantum optimization with time rescaling", "fqa"};
    app.require_subcommand(1);
    app.set_help_flag();

    std::string problem;
    std::string graph;
    std::size_t generate = 0;
    std::string rescale = "identity";
    double a = 0.0;
    double tf = 0.0;
    std::vector<std::string> variants;

    auto add_instance_flags = [&](CLI::App *sub) {
        sub->add_option("--problem", problem, "maxcut or annni")->required();
        sub->add_option("--graph", graph, "edge-list file (maxcut)");
        sub->add_option("--generate-regular", generate,
                        "generate a random 3-regular graph on V vertices (maxcut)");
        sub->add_option("--seed", cfg.seed, "seed for --generate-regular");
        sub->add_option("--L", cfg.chain_length, "chain length (annni)");
        sub->add_option("--kappa", cfg.kappa, "next-nearest-neighbour coupling (annni)");
        sub->add_option("--g", cfg.g, "transverse field (annni)");
    };
    auto add_run_flags = [&](CLI::App *sub) {
        sub->add_option("--dt", cfg.dt, "time step (dt or dtau)")->required();
        sub->add_option("--layers", cfg.layers, "number of layers")->required();
        sub->add_option("--out", cfg.out, "trajectory CSV path")->required();
        sub->add_option("--max-substep", cfg.max_substep,
                        "longest product-formula step for non-diagonal problems");
    };

    auto *run_cmd = app.add_subcommand("run", "run one feedback trajectory");
    add_instance_flags(run_cmd);
    add_run_flags(run_cmd);
    auto *rescale_opt = run_cmd->add_option("--rescale", rescale, "identity, sine or poly");
    auto *a_opt = run_cmd->add_option("--a", a, "rescaling contraction parameter");
    auto *tf_opt = run_cmd->add_option("--tf", tf, "original final time");

    auto *sweep_cmd = app.add_subcommand("sweep", "run several rescaling variants");
    add_instance_flags(sweep_cmd);
    add_run_flags(sweep_cmd);
    sweep_cmd
        ->add_option("--variant", variants, "identity | sine:A:TF | poly:A:TF (repeatable)")
        ->required();
    sweep_cmd->add_option("--jobs", cfg.jobs, "concurrent runs");

    auto *oracle_cmd = app.add_subcommand("oracle", "brute-force and dense ground truth");
    add_instance_flags(oracle_cmd);
    oracle_cmd->add_option("--out", cfg.out, "also write the report to this path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    CLI::App *used = nullptr;
    if (run_cmd->parsed()) {
        cfg.command = Command::run;
        used = run_cmd;
    } else if (sweep_cmd->parsed()) {
        cfg.command = Command::sweep;
        used = sweep_cmd;
    } else {
        cfg.command = Command::oracle;
        used = oracle_cmd;
    }

    if (problem == "maxcut") {
        cfg.problem = ProblemKind::maxcut;
        const bool has_graph = used->count("--graph") > 0;
        const bool has_gen = used->count("--generate-regular") > 0;
        if (has_graph == has_gen) {
            throw UsageError("maxcut needs exactly one of --graph or --generate-regular");
        }
        if (has_graph) {
            cfg.graph_path = graph;
        } else {
            cfg.generate_regular = generate;
        }
        for (const char *flag : {"--L", "--kappa", "--g"}) {
            if (used->count(flag) > 0) {
                throw UsageError(fmt::format("{} only applies to --problem annni", flag));
            }
        }
    } else if (problem == "annni") {
        cfg.problem = ProblemKind::annni;
        for (const char *flag : {"--L", "--kappa", "--g"}) {
            if (used->count(flag) == 0) {
                throw UsageError(fmt::format("{} is required for --problem annni", flag));
            }
        }
        for (const char *flag : {"--graph", "--generate-regular", "--seed"}) {
            if (used->count(flag) > 0) {
                throw UsageError(fmt::format("{} only applies to --problem maxcut", flag));
            }
        }
        if (cfg.chain_length < 4) {
            throw UsageError("--L must be at least 4");
        }
        if (!std::isfinite(cfg.kappa) || !std::isfinite(cfg.g)) {
            throw UsageError("--kappa and --g must be finite");
        }
    } else {
        throw UsageError(fmt::format("--problem: unknown problem '{}'", problem));
    }

    if (cfg.command != Command::oracle) {
        if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
            throw UsageError("--dt must be positive");
        }
        if (cfg.layers < 1) {
            throw UsageError("--layers must be at least 1");
        }
        if (!(cfg.max_substep > 0.0) || !std::isfinite(cfg.max_substep)) {
            throw UsageError("--max-substep must be positive");
        }
    }

    if (cfg.command == Command::run) {
        const auto family = parse_rescale_family(rescale);
        if (!family) {
            throw UsageError(fmt::format("--rescale: unknown family '{}'", rescale));
        }
        if (*family == RescaleFamily::identity) {
            if (a_opt->count() > 0 || tf_opt->count() > 0) {
                throw UsageError("--a and --tf require --rescale sine or poly");
            }
            cfg.rescale = RescaleSpec::identity();
        } else {
            if (a_opt->count() == 0) {
                throw UsageError(fmt::format("--a is required for --rescale {}", rescale));
            }
            if (tf_opt->count() == 0) {
                throw UsageError(fmt::format("--tf is required for --rescale {}", rescale));
            }
            if (!(a > 0.0) || !std::isfinite(a)) {
                throw UsageError("--a: a must be positive");
            }
            if (!(tf > 0.0) || !std::isfinite(tf)) {
                throw UsageError("--tf: tf must be positive");
            }
            cfg.rescale = RescaleSpec{*family, a, tf};
        }
        (void)rescale_opt;
    }

    if (cfg.command == Command::sweep) {
        for (const auto &v : variants) {
            cfg.variants.push_back(parse_variant(v));
        }
        if (cfg.jobs < 1) {
            throw UsageError("--jobs must be at least 1");
        }
    }
    return cfg;
}

void write_trajectory_csv(std::ostream &os, const Trajectory &t) {
    os << kCsvHeader << '\n';
    for (const auto &r : t.records) {
        os << fmt::format("{},{},{},{},{},", r.layer, r.beta, r.A, r.J, r.fdot);
        if (r.success_prob) {
            os << fmt::format("{}", *r.success_prob);
        }
        os << '\n';
    }
}

void write_file_atomic(const std::string &path, const std::string &content) {
    namespace fs = std::filesystem;
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) {
            throw Error(fmt::format("cannot open '{}' for writing", tmp));
        }
        os << content;
        os.close();
        if (!os) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw Error(fmt::format("failed writing '{}'", tmp));
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(fmt::format("cannot move output into place at '{}'", path));
    }
}

std::string variant_path(const std::string &out, const std::string &label) {
    const std::filesystem::path p(out);
    auto name = p.stem().string() + "." + label + p.extension().string();
    return (p.parent_path() / name).string();
}

namespace {

struct Instance {
    Observable problem;
    std::optional<Graph> graph;
    std::optional<std::vector<std::uint64_t>> solutions;
    std::optional<double> max_cut;
    std::optional<double> ground_energy;
    std::vector<std::pair<std::string, std::string>> echo;
};

Instance build_instance(const CliConfig &cfg) {
    if (cfg.problem == ProblemKind::maxcut) {
        Graph g = cfg.graph_path ? load_graph_file(*cfg.graph_path)
                                 : random_regular_graph(*cfg.generate_regular, 3, cfg.seed);
        Instance inst{maxcut_hamiltonian(g), g, {}, {}, {}, {}};
        inst.echo.emplace_back("problem", "maxcut");
        if (cfg.graph_path) {
            inst.echo.emplace_back("graph", *cfg.graph_path);
        } else {
            inst.echo.emplace_back("generate_regular", std::to_string(*cfg.generate_regular));
            inst.echo.emplace_back("seed", std::to_string(cfg.seed));
        }
        inst.echo.emplace_back("vertices", std::to_string(g.num_vertices()));
        inst.echo.emplace_back("edges", std::to_string(g.edges().size()));
        if (g.num_vertices() <= oracle::kMaxCutVertexCap) {
            auto sol = oracle::brute_force_maxcut(g);
            inst.max_cut = sol.max_value;
            inst.solutions = std::move(sol.argmax);
        }
        if (g.num_vertices() <= kDenseQubitCap) {
            inst.ground_energy = oracle::ground_energy(inst.problem);
        } else if (inst.max_cut) {
            // Diagonal problem: the ground energy is minus the maximum cut.
            inst.ground_energy = -*inst.max_cut;
        }
        return inst;
    }
    const AnnniParams params{cfg.chain_length, cfg.kappa, cfg.g};
    Instance inst{annni_hamiltonian(params), std::nullopt, {}, {}, {}, {}};
    inst.echo.emplace_back("problem", "annni");
    inst.echo.emplace_back("L", std::to_string(cfg.chain_length));
    inst.echo.emplace_back("kappa", fmt::format("{}", cfg.kappa));
    inst.echo.emplace_back("g", fmt::format("{}", cfg.g));
    if (cfg.chain_length <= kDenseQubitCap) {
        inst.ground_energy = oracle::ground_energy(inst.problem);
    }
    return inst;
}

std::string summary_text(const CliConfig &cfg, const Instance &inst, const RescaleSpec &rescale,
                         const Trajectory &t, double wall_seconds, const std::string &csv) {
    std::string s;
    auto kv = [&s](std::string_view k, const std::string &v) {
        s += fmt::format("{}={}\n", k, v);
    };
    kv("status", t.complete() ? "complete" : "truncated");
    kv("layers_requested", std::to_string(cfg.layers));
    kv("layers_completed", std::to_string(t.records.size()));
    if (t.failure) {
        kv("failure_layer", std::to_string(t.failure->layer));
        kv("failure", t.failure->message);
    }
    if (!t.records.empty()) {
        const auto &last = t.records.back();
        kv("final_J", fmt::format("{}", last.J));
        if (inst.ground_energy) {
            kv("gap", fmt::format("{}", last.J - *inst.ground_energy));
        }
        if (last.success_prob) {
            kv("final_success_prob", fmt::format("{}", *last.success_prob));
        }
    }
    if (inst.ground_energy) {
        kv("ground_energy", fmt::format("{}", *inst.ground_energy));
    }
    if (inst.max_cut) {
        kv("max_cut", fmt::format("{}", *inst.max_cut));
        kv("num_solutions", std::to_string(inst.solutions->size()));
    }
    kv("wall_time_s", fmt::format("{:.3f}", wall_seconds));
    kv("command", std::string(command_name(cfg.command)));
    for (const auto &[k, v] : inst.echo) {
        kv(k, v);
    }
    kv("dt", fmt::format("{}", cfg.dt));
    kv("layers", std::to_string(cfg.layers));
    kv("max_substep", fmt::format("{}", cfg.max_substep));
    kv("rescale", std::string(to_string(rescale.family)));
    if (rescale.family != RescaleFamily::identity) {
        kv("a", fmt::format("{}", rescale.a));
        kv("tf", fmt::format("{}", rescale.t_f));
    }
    kv("csv", csv);
    return s;
}

RunConfig make_run_config(const CliConfig &cfg, const Instance &inst, const RescaleSpec &rescale) {
    RunConfig rc{inst.problem,
                  driver_hamiltonian(inst.problem.num_qubits()),
                  cfg.dt,
                  cfg.layers,
                  rescale,
                  inst.solutions,
                  inst.ground_energy};
    rc.max_substep = cfg.max_substep;
    return rc;
}

// Returns false when the trajectory was truncated.
bool emit(const CliConfig &cfg, const Instance &inst, const RescaleSpec &rescale,
          const Trajectory &t, double wall, const std::string &path, std::ostream &err) {
    std::ostringstream csv;
    write_trajectory_csv(csv, t);
    write_file_atomic(path, csv.str());
    write_file_atomic(path + ".summary", summary_text(cfg, inst, rescale, t, wall, path));
    if (t.failure) {
        err << fmt::format("fqa: {}: run stopped at layer {}: {}\n", path, t.failure->layer,
                           t.failure->message);
        return false;
    }
    return true;
}

std::string oracle_report(const Instance &inst) {
    std::string s;
    if (inst.graph) {
        const auto n = inst.graph->num_vertices();
        if (!inst.max_cut) {
            throw SizeError(fmt::format("brute-force MaxCut over {} vertices exceeds cap of {}",
                                        n, oracle::kMaxCutVertexCap));
        }
        s += fmt::format("max_cut={}\n", *inst.max_cut);
        s += fmt::format("num_solutions={}\n", inst.solutions->size());
        std::string list;
        for (const auto z : *inst.solutions) {
            if (!list.empty()) {
                list += ',';
            }
            // Printed most significant (highest vertex) first.
            for (std::size_t b = n; b-- > 0;) {
                list += ((z >> b) & 1u) ? '1' : '0';
            }
        }
        s += fmt::format("solutions={}\n", list);
    }
    if (inst.ground_energy) {
        s += fmt::format("ground_energy={}\n", *inst.ground_energy);
    }
    return s;
}

} // namespace

int execute(const CliConfig &config, std::ostream &out, std::ostream &err) {
    try {
        const Instance inst = build_instance(config);

        if (config.command == Command::oracle) {
            const auto report = oracle_report(inst);
            out << report;
            if (!config.out.empty()) {
                write_file_atomic(config.out, report);
            }
            return 0;
        }

        if (config.command == Command::run) {
            const auto started = std::chrono::steady_clock::now();
            const auto t = run(make_run_config(config, inst, config.rescale));
            const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - started;
            return emit(config, inst, config.rescale, t, wall.count(), config.out, err) ? 0 : 3;
        }

        std::vector<RunConfig> runs;
        runs.reserve(config.variants.size());
        for (const auto &v : config.variants) {
            runs.push_back(make_run_config(config, inst, v));
        }
        const auto started = std::chrono::steady_clock::now();
        const auto results = sweep(runs, config.jobs);
        const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - started;

        int status = 0;
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto &v = config.variants[i];
            const auto path = variant_path(config.out, v.label());
            if (results[i].error) {
                err << fmt::format("fqa: {}: {}\n", v.label(), *results[i].error);
                status = 1;
                continue;
            }
            if (!emit(config, inst, v, *results[i].trajectory, wall.count(), path, err)) {
                status = std::max(status, 3);
            } else {
                out << path << '\n';
            }
        }
        return status;
    } catch (const std::exception &e) {
        err << "fqa: error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace fqa::cli
