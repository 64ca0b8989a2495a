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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "fqa/cli.hpp"
#include "fqa/engine.hpp"
#include "fqa/hamiltonians.hpp"
#include "fqa/oracle.hpp"
#include "fqa/pauli.hpp"
#include "fqa/rescaling.hpp"
#include "fqa/statevector.hpp"

namespace {

using namespace fqa;
using Rng = std::mt19937_64;

struct Outcome {
    bool pass;
    std::string detail;
};

RunConfig maxcut_run(const Graph &g, double dt, std::size_t layers, RescaleSpec rescale) {
    return RunConfig{maxcut_hamiltonian(g),
                     driver_hamiltonian(g.num_vertices()),
                     dt,
                     layers,
                     rescale,
                     oracle::brute_force_maxcut(g).argmax,
                     std::nullopt};
}

// 1. Endpoint identities and derivative consistency of both rescalings.
Outcome rescaling_identities() {
    double worst_endpoint = 0.0;
    double worst_fd = 0.0;
    for (const auto family : {RescaleFamily::sine, RescaleFamily::polynomial}) {
        for (const double a : {1.5, 2.0, 3.0}) {
            for (const double tf : {8.0, 16.0, 18.0}) {
                const RescaleSpec spec{family, a, tf};
                const double horizon = tf / a;
                const auto start = evaluate(spec, 0.0);
                const auto end = evaluate(spec, horizon);
                worst_endpoint = std::max({worst_endpoint, std::abs(start.f),
                                           std::abs(end.f - tf), std::abs(start.fdot - 1.0),
                                           std::abs(end.fdot - 1.0)});
                constexpr double h = 1e-5;
                for (int i = 1; i < 500; ++i) {
                    const double tau = horizon * i / 500.0;
                    const double fd = (evaluate_unchecked(spec, tau + h).f -
                                       evaluate_unchecked(spec, tau - h).f) /
                                      (2 * h);
                    worst_fd = std::max(worst_fd, std::abs(fd - evaluate_unchecked(spec, tau).fdot));
                }
            }
        }
    }
    return {worst_endpoint <= 1e-12 && worst_fd <= 1e-6,
            fmt::format("max endpoint error {:.2e} (tol 1e-12), max finite-difference error {:.2e} "
                        "(tol 1e-6)",
                        worst_endpoint, worst_fd)};
}

// 2. Unit contraction reduces to the plain feedback run.
Outcome unit_contraction() {
    const auto g = random_regular_graph(6, 3, 7);
    const auto id = run(maxcut_run(g, 0.04, 200, RescaleSpec::identity()));
    const auto tr = run(maxcut_run(g, 0.04, 200, RescaleSpec::sine(1.0, 8.0)));
    double worst = 0.0;
    bool same_shape = id.records.size() == 200 && tr.records.size() == 200;
    for (std::size_t k = 0; same_shape && k < 200; ++k) {
        const auto &x = id.records[k];
        const auto &y = tr.records[k];
        same_shape = same_shape && x.layer == y.layer;
        worst = std::max({worst, std::abs(x.beta - y.beta), std::abs(x.A - y.A),
                          std::abs(x.J - y.J), std::abs(x.fdot - y.fdot),
                          std::abs(*x.success_prob - *y.success_prob)});
    }
    return {same_shape && worst <= 1e-12,
            fmt::format("max field difference {:.2e} over 200 layers (tol 1e-12)", worst)};
}

// 3. Monotone descent and closeness to the optimum on 8-vertex graphs.
Outcome lyapunov_descent() {
    std::size_t monotone = 0;
    std::size_t close = 0;
    std::string ratios;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto g = random_regular_graph(8, 3, seed);
        const double max_cut = oracle::brute_force_maxcut(g).max_value;
        const auto t = run(maxcut_run(g, 0.01, 500, RescaleSpec::identity()));
        bool ok = t.complete();
        for (std::size_t k = 1; k < t.records.size(); ++k) {
            ok = ok && t.records[k].J <= t.records[k - 1].J + 1e-6;
        }
        monotone += ok;
        const double final_j = t.records.back().J;
        const double rel = std::abs(final_j + max_cut) / max_cut;
        close += rel <= 0.05;
        ratios += fmt::format("{}{:.3f}", ratios.empty() ? "" : ", ", -final_j / max_cut);
    }
    return {monotone == 5 && close >= 4,
            fmt::format("monotone on {}/5 graphs; final J / -maxcut = [{}]; within 5% on {}/5 "
                        "(need 4)",
                        monotone, ratios, close)};
}

// 4. Gate kernels versus exact exponentials.
Outcome kernel_correctness() {
    // ANNNI: replay the recorded betas with exact propagators.
    const RunConfig cfg{annni_hamiltonian({4, 0.5, 0.5}), driver_hamiltonian(4), 0.01, 100};
    const auto t = run(cfg);
    auto exact = Statevector::uniform_superposition(4);
    for (const auto &r : t.records) {
        exact = oracle::exact_propagator(cfg.problem, r.fdot * cfg.dt, exact);
        exact = oracle::exact_propagator(cfg.driver, r.beta * r.fdot * cfg.dt, exact);
    }
    const double annni_fid = fidelity(t.final_state, exact);

    // MaxCut: per-layer comparison on a 6-vertex graph.
    const auto g = random_regular_graph(6, 3, 11);
    const auto hp = maxcut_hamiltonian(g);
    const auto hd = driver_hamiltonian(6);
    const PropagatorPlan pp(hp);
    const PropagatorPlan pd(hd);
    Rng rng(5);
    std::uniform_real_distribution<double> beta(-2.0, 2.0);
    auto s = Statevector::uniform_superposition(6);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double b = beta(rng);
        auto fast = s;
        pp.apply(fast, 0.04);
        pd.apply(fast, b * 0.04);
        auto ref = oracle::exact_propagator(hp, 0.04, s);
        ref = oracle::exact_propagator(hd, b * 0.04, ref);
        worst = std::max(worst, std::abs(1.0 - fidelity(fast, ref)));
        s = fast;
    }
    return {annni_fid >= 1.0 - 1e-5 && worst <= 1e-12,
            fmt::format("ANNNI L=4 final fidelity 1-{:.2e} (tol 1e-5); MaxCut worst per-layer "
                        "|1-F| {:.2e} (tol 1e-12)",
                        1.0 - annni_fid, worst)};
}

// 5. Rescaled run ahead of the plain run early on, 10-vertex graphs.
Outcome early_advantage() {
    constexpr double dtau = 0.04;
    constexpr double a = 2.0;
    constexpr std::size_t planned_layers = 400;
    constexpr double tf = dtau * planned_layers * a / 2.0;
    constexpr std::size_t probe = 100;
    std::size_t wins = 0;
    std::string pairs;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto g = random_regular_graph(10, 3, seed);
        const auto plain = run(maxcut_run(g, dtau, probe, RescaleSpec::identity()));
        const auto tr = run(maxcut_run(g, dtau, probe, RescaleSpec::sine(a, tf)));
        const double p_plain = *plain.records.back().success_prob;
        const double p_tr = *tr.records.back().success_prob;
        wins += p_tr > p_plain;
        pairs += fmt::format("{}{:.3f}/{:.3f}", pairs.empty() ? "" : ", ", p_tr, p_plain);
    }
    return {wins >= 4, fmt::format("t_f={} layer {} success TR/plain = [{}]; TR ahead on {}/5 "
                                   "(need 4)",
                                   tf, probe, pairs, wins)};
}

// 6. ANNNI L=8: faster approach to the ground energy with larger contraction.
Outcome annni_speedup() {
    constexpr double dt = 0.01;
    constexpr std::size_t layers = 1000;
    // Same scaling as the MaxCut comparison: the run spans two rescaled horizons.
    auto tf = [](double a) { return dt * layers * a / 2.0; };
    const auto hp = annni_hamiltonian({8, 0.5, 0.5});
    const auto hd = driver_hamiltonian(8);
    const double e0 = oracle::ground_energy(hp);
    const std::vector<RescaleSpec> specs{RescaleSpec::identity(), RescaleSpec::sine(2.0, tf(2.0)),
                                         RescaleSpec::sine(3.0, tf(3.0))};
    std::vector<RunConfig> configs;
    for (const auto &spec : specs) {
        configs.push_back(RunConfig{hp, hd, dt, layers, spec, std::nullopt, e0});
    }
    const auto results = sweep(configs, 3);
    bool ok = true;
    std::vector<std::size_t> hit;
    std::string detail;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto &label = specs[i].label();
        if (!results[i].trajectory) {
            return {false, fmt::format("{} failed: {}", label, *results[i].error)};
        }
        const auto &recs = results[i].trajectory->records;
        double max_rise = 0.0;
        std::size_t rise_layer = 0;
        bool bounded = true;
        std::size_t first = 0;
        for (std::size_t k = 0; k < recs.size(); ++k) {
            if (k > 0 && recs[k].J - recs[k - 1].J > max_rise) {
                max_rise = recs[k].J - recs[k - 1].J;
                rise_layer = recs[k].layer;
            }
            bounded = bounded && recs[k].J >= e0 - 1e-9;
            if (first == 0 && std::abs(recs[k].J - e0) < 0.05 * std::abs(e0)) {
                first = recs[k].layer;
            }
        }
        const bool monotone = recs.size() == layers && max_rise <= 1e-6;
        ok = ok && monotone && bounded && first != 0;
        hit.push_back(first);
        detail += fmt::format("{}{}: max rise {:.1e} at layer {}, first<5% layer={}, final gap "
                              "{:.4f}",
                              detail.empty() ? "" : "; ", label, max_rise, rise_layer, first,
                              recs.back().J - e0);
    }
    ok = ok && hit[2] < hit[1] && hit[1] < hit[0];
    return {ok, fmt::format("E0={:.6f}; {}", e0, detail)};
}

// 7. Full-size run through the command-line front end.
Outcome full_size_run() {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "fqa_acceptance_full";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const auto csv = (dir / "r.csv").string();
    const auto cfg = cli::parse_args({"run", "--problem", "maxcut", "--generate-regular", "16",
                                      "--seed", "1", "--dt", "0.04", "--layers", "400",
                                      "--rescale", "sine", "--a", "2", "--tf", "16", "--out",
                                      csv});
    std::ostringstream out;
    std::ostringstream err;
    const auto start = std::chrono::steady_clock::now();
    const int code = cli::execute(cfg, out, err);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ifstream in(csv);
    std::size_t rows = 0;
    bool finite = true;
    std::string line;
    std::getline(in, line);
    const bool header = line == cli::kCsvHeader;
    while (std::getline(in, line)) {
        ++rows;
        std::istringstream fields(line);
        for (std::string field; std::getline(fields, field, ',');) {
            if (!field.empty() && !std::isfinite(std::stod(field))) {
                finite = false;
            }
        }
    }
    fs::remove_all(dir);
    return {code == 0 && header && rows == 400 && finite && seconds < 600.0,
            fmt::format("exit {} rows {} finite={} in {:.1f}s (limit 600s)", code, rows, finite,
                        seconds)};
}

// 8. Property suites over random instances.
Outcome invariant_suites() {
    Rng rng(2026);
    std::uniform_int_distribution<int> op(0, 3);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    auto random_observable = [&](std::size_t n, std::size_t terms) {
        Observable obs(n);
        for (std::size_t t = 0; t < terms; ++t) {
            std::vector<PauliFactor> factors;
            for (std::uint32_t q = 0; q < n; ++q) {
                if (const int o = op(rng); o != 0) {
                    factors.push_back({q, static_cast<Pauli>(o)});
                }
            }
            obs.add_term(coef(rng), PauliString(factors));
        }
        return obs;
    };
    auto random_state = [&](std::size_t n) {
        std::normal_distribution<double> gauss;
        std::vector<Amplitude> amps(std::size_t{1} << n);
        double norm = 0.0;
        for (auto &x : amps) {
            x = {gauss(rng), gauss(rng)};
            norm += std::norm(x);
        }
        for (auto &x : amps) {
            x /= std::sqrt(norm);
        }
        return Statevector::from_amplitudes(amps);
    };

    // Pauli algebra: the product's dense matrix is the product of dense matrices.
    std::size_t algebra_fail = 0;
    for (int i = 0; i < 100; ++i) {
        const auto a = random_observable(4, 3);
        const auto b = random_observable(4, 3);
        const Eigen::MatrixXcd da = to_dense(a);
        const Eigen::MatrixXcd db = to_dense(b);
        const Eigen::MatrixXcd comm = std::complex<double>(0, 1) * (da * db - db * da);
        algebra_fail += (to_dense(commutator_i(a, b)) - comm).cwiseAbs().maxCoeff() > 1e-12;
        for (const auto &[pa, ca] : a.terms()) {
            for (const auto &[pb, cb] : b.terms()) {
                const auto prod = pauli_product(pa, pb);
                const Eigen::MatrixXcd lhs = prod.phase() * to_dense(prod.string, 4);
                const Eigen::MatrixXcd rhs = to_dense(pa, 4) * to_dense(pb, 4);
                algebra_fail += (lhs - rhs).cwiseAbs().maxCoeff() > 1e-15;
            }
        }
    }

    // Norm preservation under every kernel.
    std::size_t norm_fail = 0;
    std::uniform_real_distribution<double> angle(-7.0, 7.0);
    for (int i = 0; i < 100; ++i) {
        auto s = random_state(6);
        const auto q = static_cast<std::size_t>(i % 6);
        const auto r = static_cast<std::size_t>((i + 1 + i / 6) % 6 == q ? (q + 1) % 6
                                                                          : (i + 1 + i / 6) % 6);
        s.apply_rx(q, angle(rng));
        s.apply_zz_phase(q, r, angle(rng));
        s.apply_yy(q, r, angle(rng));
        s.apply_z_string_phase(rng() & 63, angle(rng));
        norm_fail += std::abs(s.norm_squared() - 1.0) > 1e-12;
    }

    // Engine: energy bound, A consistency, beta law.
    std::size_t engine_fail = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 4 + 2 * (seed % 3);
        const auto g = random_regular_graph(n, 3, seed);
        const auto rescale = seed % 2 ? RescaleSpec::sine(2.0, 1.0) : RescaleSpec::identity();
        const auto cfg = maxcut_run(g, 0.02, 100, rescale);
        const auto t = run(cfg);
        const double e0 = oracle::ground_energy(cfg.problem);
        const auto comm = commutator_i(cfg.driver, cfg.problem);
        bool ok = t.complete() && t.records.front().beta == 0.0;
        for (std::size_t k = 0; k < t.records.size(); ++k) {
            ok = ok && t.records[k].J >= e0 - 1e-9;
            if (k > 0) {
                ok = ok && std::abs(t.records[k].beta * t.records[k].fdot + t.records[k - 1].A) <=
                               1e-12;
            }
        }
        ok = ok && std::abs(t.records.back().A - expectation(t.final_state, comm)) <= 1e-12;
        engine_fail += !ok;
    }
    return {algebra_fail == 0 && norm_fail == 0 && engine_fail == 0,
            fmt::format("failures: pauli algebra {}, norm {}, engine {} (100 instances each)",
                        algebra_fail, norm_fail, engine_fail)};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 rescaling identities", rescaling_identities},
        {"2 unit contraction reduces to plain run", unit_contraction},
        {"3 Lyapunov descent on 8-vertex graphs", lyapunov_descent},
        {"4 kernel and splitting correctness", kernel_correctness},
        {"5 rescaled MaxCut ahead at layer 100", early_advantage},
        {"6 ANNNI approach ordered by contraction", annni_speedup},
        {"7 16-qubit 400-layer run completes", full_size_run},
        {"8 invariant property suites", invariant_suites},
    };
    int failures = 0;
    for (const auto &[name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, fmt::format("threw: {}", e.what())};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        std::cout << fmt::format("[{}] {} ({:.1f}s): {}\n", o.pass ? "PASS" : "FAIL", name,
                                 seconds, o.detail)
                  << std::flush;
    }
    std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failures,
                             criteria.size());
    return failures == 0 ? 0 : 1;
}
