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

// Ground truth computed without the gate kernels: exhaustive enumeration and
// dense linear algebra. Everything here is deliberately slow and simple.

#pragma once

#include <cstdint>
#include <vector>

#include "fqa/hamiltonians.hpp"
#include "fqa/pauli.hpp"
#include "fqa/statevector.hpp"

namespace fqa::oracle {

inline constexpr std::size_t kMaxCutVertexCap = 26;
inline constexpr std::size_t kPropagatorQubitCap = 6;

struct MaxCutSolution {
    double max_value;
    std::vector<std::uint64_t> argmax; // ascending, closed under complement
};

/// Exhaustive search over all 2^V partitions. Ties within 1e-9 (relative to
/// the total absolute weight) are all kept.
[[nodiscard]] MaxCutSolution brute_force_maxcut(const Graph &g);

/// Lowest eigenvalue of the dense matrix.
[[nodiscard]] double ground_energy(const Observable &obs, std::size_t max_qubits = kDenseQubitCap);

/// exp(-i duration H) |s> through a dense eigendecomposition of H.
[[nodiscard]] Statevector exact_propagator(const Observable &obs, double duration,
                                           const Statevector &s,
                                           std::size_t max_qubits = kPropagatorQubitCap);

} // namespace fqa::oracle
