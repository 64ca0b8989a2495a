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

#include "fqa/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "fqa/error.hpp"

namespace fqa::oracle {

MaxCutSolution brute_force_maxcut(const Graph &g) {
    const auto n = g.num_vertices();
    if (n > kMaxCutVertexCap) {
        throw SizeError(fmt::format("brute-force MaxCut over {} vertices exceeds cap of {}", n,
                                    kMaxCutVertexCap));
    }
    double scale = 0.0;
    for (const auto &e : g.edges()) {
        scale += std::abs(e.weight);
    }
    const double tol = 1e-9 * std::max(1.0, scale);

    const std::uint64_t count = std::uint64_t{1} << n;
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::uint64_t> argmax;
    for (std::uint64_t z = 0; z < count; ++z) {
        const double cut = g.cut_value(z);
        if (cut > best + tol) {
            best = cut;
            argmax.clear();
            argmax.push_back(z);
        } else if (cut >= best - tol) {
            argmax.push_back(z);
        }
    }

    const std::uint64_t all = count - 1;
    for (const auto z : argmax) {
        if (!std::binary_search(argmax.begin(), argmax.end(), z ^ all)) {
            throw NumericalError(
                fmt::format("MaxCut optimum {} lacks its complement {}", z, z ^ all));
        }
    }
    return {best, std::move(argmax)};
}

namespace {

bool is_real(const Eigen::MatrixXcd &m) {
    return m.imag().cwiseAbs().maxCoeff() == 0.0;
}

} // namespace

double ground_energy(const Observable &obs, std::size_t max_qubits) {
    if (obs.num_qubits() > max_qubits) {
        throw SizeError(fmt::format("ground energy over {} qubits exceeds cap of {}",
                                    obs.num_qubits(), max_qubits));
    }
    const Eigen::MatrixXcd m = to_dense(obs, max_qubits);
    // Real-symmetric input (no odd Y count anywhere) takes the cheaper path.
    if (is_real(m)) {
        const Eigen::MatrixXd r = m.real();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(r, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) {
            throw NumericalError("symmetric eigensolver failed");
        }
        return solver.eigenvalues().minCoeff();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("Hermitian eigensolver failed");
    }
    return solver.eigenvalues().minCoeff();
}

Statevector exact_propagator(const Observable &obs, double duration, const Statevector &s,
                             std::size_t max_qubits) {
    if (obs.num_qubits() > max_qubits) {
        throw SizeError(fmt::format("exact propagator over {} qubits exceeds cap of {}",
                                    obs.num_qubits(), max_qubits));
    }
    if (obs.num_qubits() != s.num_qubits()) {
        throw RegisterMismatch(fmt::format("{}-qubit propagator applied to {} qubits",
                                           obs.num_qubits(), s.num_qubits()));
    }
    const Eigen::MatrixXcd m = to_dense(obs, max_qubits);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("Hermitian eigensolver failed");
    }
    const auto &vecs = solver.eigenvectors();
    const auto &vals = solver.eigenvalues();

    const auto amps = s.amplitudes();
    const Eigen::VectorXcd psi = Eigen::Map<const Eigen::VectorXcd>(amps.data(),
                                                                    static_cast<Eigen::Index>(amps.size()));
    Eigen::VectorXcd coeffs = vecs.adjoint() * psi;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        coeffs[k] *= std::polar(1.0, -duration * vals[k]);
    }
    const Eigen::VectorXcd out = vecs * coeffs;
    return Statevector::from_amplitudes(std::vector<Amplitude>(out.data(), out.data() + out.size()));
}

} // namespace fqa::oracle
