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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "fqa/pauli.hpp"

namespace fqa {

using Amplitude = std::complex<double>;

/// 2^26 complex doubles is 1 GiB.
inline constexpr std::size_t kMaxStatevectorQubits = 26;

/**
 * Dense state over L qubits, little-endian: qubit j is bit j of the basis
 * index. All gate kernels act in place by walking amplitude pairs (or
 * 4-blocks) with explicit index arithmetic.
 *
 * Single-writer: one mutating call at a time. Kernels may split the
 * amplitude range internally across threads.
 */
class Statevector {
  public:
    /// |0...0>.
    explicit Statevector(std::size_t num_qubits);

    /// prod_j (|0> + |1>)/sqrt(2).
    static Statevector uniform_superposition(std::size_t num_qubits);
    static Statevector basis_state(std::size_t num_qubits, std::uint64_t index);
    /// Takes ownership of `amplitudes` (size must be a power of two >= 2).
    /// No normalization is applied.
    static Statevector from_amplitudes(std::vector<Amplitude> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] std::span<Amplitude> amplitudes() noexcept { return amps_; }
    [[nodiscard]] const Amplitude &operator[](std::uint64_t z) const { return amps_[z]; }

    [[nodiscard]] double norm_squared() const;

    /// Multiplies amplitude z by exp(-i theta s_i s_j), s = +1 for bit 0 and
    /// -1 for bit 1.
    void apply_zz_phase(std::size_t i, std::size_t j, double theta);

    /// Multiplies amplitude z by exp(-i theta (-1)^{popcount(z & mask)}):
    /// the exponential of an arbitrary Z-type string.
    void apply_z_string_phase(std::uint64_t mask, double theta);

    /// exp(-i theta X_j) = cos(theta) I - i sin(theta) X_j.
    void apply_rx(std::size_t j, double theta);

    /// exp(-i theta Y_i Y_j).
    void apply_yy(std::size_t i, std::size_t j, double theta);

    /// Multiplies amplitude z by exp(-i duration energies[z]).
    void apply_diagonal(std::span<const double> energies, double duration);

    /// Multiplies every amplitude by `phase`.
    void scale(Amplitude phase) noexcept;

    bool operator==(const Statevector &) const = default;

  private:
    Statevector(std::size_t num_qubits, std::vector<Amplitude> amps);

    void check_qubit(std::size_t j) const;

    std::size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

[[nodiscard]] Amplitude inner_product(const Statevector &bra, const Statevector &ket);

/// |<a|b>|^2.
[[nodiscard]] double fidelity(const Statevector &a, const Statevector &b);

/**
 * Observable prepared for repeated expectation evaluation. Terms sharing a
 * flip mask are evaluated in one pass over the amplitudes, so a diagonal
 * Hamiltonian costs a single pass regardless of term count.
 */
class CompiledObservable {
  public:
    explicit CompiledObservable(const Observable &obs);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }

    /// <psi|O|psi>. Throws NumericalError if the imaginary residue exceeds
    /// 1e-9 and RegisterMismatch on a size mismatch.
    [[nodiscard]] double expectation(const Statevector &s) const;

  private:
    struct Term {
        std::uint64_t phase_mask;
        Amplitude coeff; // includes i^{y_count}
    };
    struct Group {
        std::uint64_t flip_mask;
        std::vector<Term> terms;
    };

    std::size_t num_qubits_;
    double constant_;
    std::vector<Group> groups_;
};

[[nodiscard]] double expectation(const Statevector &s, const Observable &obs);

/// Total probability on the given basis indices. Throws on an empty set.
[[nodiscard]] double success_probability(const Statevector &s,
                                         std::span<const std::uint64_t> solutions);

enum class Splitting { first_order, symmetric };

/**
 * Product formula for exp(-i H t) where every term of H is Z-type (any
 * weight), a Y_iY_j pair, or a single X_j. Terms fall into three mutually
 * commuting groups: diagonal D (applied exactly as one phase), YY and X.
 * first_order applies D(t) YY(t) X(t); symmetric applies
 * D(t/2) YY(t/2) X(t) YY(t/2) D(t/2). Both are exact when only one group
 * is present.
 */
class PropagatorPlan {
  public:
    /// Throws InvalidArgument on any other term shape.
    explicit PropagatorPlan(const Observable &h, Splitting splitting = Splitting::symmetric);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] bool is_diagonal() const noexcept { return yy_.empty() && x_.empty(); }
    /// True when at most one term group is present, so apply() has no splitting error.
    [[nodiscard]] bool is_exact() const noexcept {
        return int(!z_.empty()) + int(!yy_.empty()) + int(!x_.empty()) <= 1;
    }

    void apply(Statevector &s, double duration) const;

  private:
    struct ZTerm {
        std::uint64_t mask;
        double coeff;
    };
    struct YYTerm {
        std::size_t i;
        std::size_t j;
        double coeff;
    };
    struct XTerm {
        std::size_t j;
        double coeff;
    };

    [[nodiscard]] double diagonal_energy(std::uint64_t z) const noexcept;
    void apply_diagonal_group(Statevector &s, double duration) const;
    void apply_yy_group(Statevector &s, double duration) const;
    void apply_x_group(Statevector &s, double duration) const;

    std::size_t num_qubits_;
    Splitting splitting_;
    double constant_ = 0.0;
    std::vector<ZTerm> z_;
    std::vector<double> energies_; // cached diagonal for moderate registers
    std::vector<YYTerm> yy_;
    std::vector<XTerm> x_;
};

} // namespace fqa
