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

#include "fqa/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <fmt/format.h>

#include "fqa/error.hpp"

namespace fqa {

void RunConfig::validate() const {
    if (problem.num_qubits() != driver.num_qubits()) {
        throw RegisterMismatch(fmt::format("problem acts on {} qubits but driver on {}",
                                           problem.num_qubits(), driver.num_qubits()));
    }
    if (problem.num_qubits() > kMaxStatevectorQubits) {
        throw InvalidArgument(fmt::format("{} qubits exceeds the statevector cap of {}",
                                          problem.num_qubits(), kMaxStatevectorQubits));
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw InvalidArgument(fmt::format("time step must be positive and finite, got {}", dt));
    }
    if (layers == 0) {
        throw InvalidArgument("layer count must be at least 1");
    }
    if (!std::isfinite(dt * static_cast<double>(layers))) {
        throw InvalidArgument("total evolution time is not finite");
    }
    if (!(fdot_epsilon >= 0.0)) {
        throw InvalidArgument("fdot guard must be non-negative");
    }
    if (!(max_substep > 0.0) || !std::isfinite(max_substep)) {
        throw InvalidArgument(fmt::format("substep cap must be positive and finite, got {}",
                                          max_substep));
    }
    rescale.validate();
    if (solutions) {
        if (solutions->empty()) {
            throw InvalidArgument("solution set is empty");
        }
        const std::uint64_t dim = std::uint64_t{1} << problem.num_qubits();
        for (const auto z : *solutions) {
            if (z >= dim) {
                throw InvalidArgument(fmt::format("solution index {} out of range", z));
            }
        }
    }
    if (commutator_i(driver, problem).is_zero()) {
        throw InvalidArgument("driver commutes with the problem Hamiltonian; A would vanish");
    }
}

double feedback_beta(double a_prev, double fdot, double epsilon) {
    if (!(fdot > epsilon)) {
        throw VanishingDerivativeError(std::nan(""), fdot, epsilon);
    }
    return -a_prev / fdot;
}

Trajectory run(const RunConfig &config) {
    config.validate();

    const PropagatorPlan problem_step(config.problem);
    const PropagatorPlan driver_step(config.driver);
    const CompiledObservable cost(config.problem);
    const CompiledObservable gradient(commutator_i(config.driver, config.problem));

    Trajectory out{{}, Statevector::uniform_superposition(config.problem.num_qubits()), {}};
    out.records.reserve(config.layers);
    auto &psi = out.final_state;

    double a_prev = 0.0;
    for (std::size_t k = 1; k <= config.layers; ++k) {
        const double tau = static_cast<double>(k) * config.dt;
        double fdot = 0.0;
        double beta = 0.0;
        try {
            fdot = evaluate(config.rescale, tau, config.fdot_epsilon).fdot;
            beta = k == 1 ? 0.0 : feedback_beta(a_prev, fdot, config.fdot_epsilon);
        } catch (const VanishingDerivativeError &e) {
            out.failure = RunFailure{k, e.what()};
            break;
        }

        const double step = fdot * config.dt;
        const auto pieces = problem_step.is_exact()
                                ? std::size_t{1}
                                : static_cast<std::size_t>(
                                      std::max(1.0, std::ceil(step / config.max_substep - 1e-9)));
        for (std::size_t p = 0; p < pieces; ++p) {
            problem_step.apply(psi, step / static_cast<double>(pieces));
        }
        driver_step.apply(psi, beta * step);

        const double a = gradient.expectation(psi);
        const double j = cost.expectation(psi);
        if (!std::isfinite(j) || !std::isfinite(a)) {
            throw NumericalError(fmt::format("non-finite measurement at layer {} (J={}, A={})", k,
                                             j, a));
        }
        std::optional<double> prob;
        if (config.solutions) {
            prob = success_probability(psi, *config.solutions);
        }
        out.records.push_back({k, beta, a, j, fdot, prob});
        a_prev = a;
    }
    return out;
}

std::vector<SweepEntry> sweep(std::span<const RunConfig> configs, std::size_t jobs) {
    std::vector<SweepEntry> results(configs.size());
    auto run_one = [&](std::size_t idx) {
        try {
            results[idx].trajectory = run(configs[idx]);
        } catch (const std::exception &e) {
            results[idx].error = e.what();
        }
    };

    const auto workers = std::min(std::max<std::size_t>(jobs, 1), configs.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < configs.size(); ++i) {
            run_one(i);
        }
        return results;
    }

    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (auto i = next.fetch_add(1); i < configs.size(); i = next.fetch_add(1)) {
                    run_one(i);
                }
            });
        }
    }
    return results;
}

} // namespace fqa
