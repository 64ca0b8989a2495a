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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fqa/pauli.hpp"
#include "fqa/rescaling.hpp"
#include "fqa/statevector.hpp"

namespace fqa {

/// Longest single product-formula step used for a problem Hamiltonian that
/// is not exactly exponentiable; longer layer durations are subdivided.
inline constexpr double kDefaultMaxSubstep = 0.005;

/**
 * One feedback run. `dt` is the (rescaled) step; layer k evolves under the
 * problem Hamiltonian for fdot(k dt) * dt and under the driver for
 * beta_k * fdot(k dt) * dt, starting from the uniform superposition.
 */
struct RunConfig {
    Observable problem;
    Observable driver;
    double dt;
    std::size_t layers;
    RescaleSpec rescale = RescaleSpec::identity();
    /// Basis indices counted by the success probability, if any.
    std::optional<std::vector<std::uint64_t>> solutions;
    /// Exact ground energy, if known; used for reporting only.
    std::optional<double> ground_energy;
    double fdot_epsilon = kDefaultFdotEpsilon;
    double max_substep = kDefaultMaxSubstep;

    /// Throws InvalidArgument (or RegisterMismatch) on a bad configuration,
    /// including a driver that commutes with the problem.
    void validate() const;
};

struct LayerRecord {
    std::size_t layer; // 1-based
    double beta;
    double A;
    double J;
    double fdot;
    std::optional<double> success_prob;

    bool operator==(const LayerRecord &) const = default;
};

/// Why a run stopped before its last layer.
struct RunFailure {
    std::size_t layer; // the layer that could not be built
    std::string message;

    bool operator==(const RunFailure &) const = default;
};

struct Trajectory {
    std::vector<LayerRecord> records;
    Statevector final_state;
    std::optional<RunFailure> failure;

    [[nodiscard]] bool complete() const noexcept { return !failure.has_value(); }

    bool operator==(const Trajectory &) const = default;
};

/// -a_prev / fdot. Throws VanishingDerivativeError when fdot <= epsilon.
[[nodiscard]] double feedback_beta(double a_prev, double fdot,
                                   double epsilon = kDefaultFdotEpsilon);

/**
 * Runs the feedback loop for `config.layers` layers.
 *
 * A vanishing rescaling derivative does not throw: the trajectory is cut at
 * the last complete layer and `failure` names the layer that failed.
 * A non-finite J or A throws NumericalError.
 */
[[nodiscard]] Trajectory run(const RunConfig &config);

struct SweepEntry {
    std::optional<Trajectory> trajectory;
    std::optional<std::string> error;
};

/// Independent runs, results in input order. Up to `jobs` runs execute
/// concurrently; an error in one entry does not affect the others.
[[nodiscard]] std::vector<SweepEntry> sweep(std::span<const RunConfig> configs,
                                            std::size_t jobs = 1);

} // namespace fqa
