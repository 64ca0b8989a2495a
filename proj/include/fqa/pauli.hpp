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
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fqa {

/// Largest register any Pauli string can address (bit masks are 64 wide).
inline constexpr std::size_t kMaxPauliQubits = 64;

/// Default cap for dense matrix materialization.
inline constexpr std::size_t kDenseQubitCap = 12;

enum class Pauli : std::uint8_t { X = 1, Y = 2, Z = 3 };

[[nodiscard]] char to_char(Pauli p) noexcept;

struct PauliFactor {
    std::uint32_t qubit;
    Pauli op;

    auto operator<=>(const PauliFactor &) const = default;
};

/**
 * Tensor product of single-qubit Pauli operators. Qubits that are not
 * listed carry the identity. Factors are kept sorted by qubit index, which
 * makes the defaulted ordering the canonical (qubit, letter) lexicographic
 * order used for term maps.
 */
class PauliString {
  public:
    PauliString() = default;
    PauliString(std::initializer_list<PauliFactor> factors);
    explicit PauliString(std::vector<PauliFactor> factors);

    static PauliString single(std::uint32_t qubit, Pauli op) {
        return PauliString{{qubit, op}};
    }
    static PauliString pair(std::uint32_t q0, Pauli p0, std::uint32_t q1, Pauli p1) {
        return PauliString{{q0, p0}, {q1, p1}};
    }

    [[nodiscard]] const std::vector<PauliFactor> &factors() const noexcept {
        return factors_;
    }
    [[nodiscard]] bool is_identity() const noexcept { return factors_.empty(); }
    [[nodiscard]] std::size_t weight() const noexcept { return factors_.size(); }
    [[nodiscard]] std::optional<Pauli> at(std::uint32_t qubit) const;

    /// One past the highest qubit index touched (0 for the identity).
    [[nodiscard]] std::size_t span() const noexcept {
        return factors_.empty() ? 0 : factors_.back().qubit + 1;
    }

    // Symplectic view: the string maps |z> to
    //   i^{y_count} (-1)^{popcount(z & phase_mask)} |z ^ flip_mask>.
    [[nodiscard]] std::uint64_t flip_mask() const noexcept;
    [[nodiscard]] std::uint64_t phase_mask() const noexcept;
    [[nodiscard]] unsigned y_count() const noexcept;
    [[nodiscard]] bool is_diagonal() const noexcept { return flip_mask() == 0; }

    /// "X0 Z3", or "I" for the identity.
    [[nodiscard]] std::string str() const;

    auto operator<=>(const PauliString &) const = default;
    bool operator==(const PauliString &) const = default;

  private:
    std::vector<PauliFactor> factors_;
};

/// `phase() * string` equals the operator product of the two inputs.
struct PauliProduct {
    unsigned i_power; // phase = i^i_power, i_power in [0, 4)
    PauliString string;

    [[nodiscard]] std::complex<double> phase() const noexcept;
};

[[nodiscard]] PauliProduct pauli_product(const PauliString &p, const PauliString &q);

[[nodiscard]] bool commutes(const PauliString &p, const PauliString &q) noexcept;

/**
 * Real-weighted sum of Pauli strings over a fixed register of `num_qubits`
 * qubits, plus a constant (the identity coefficient). Hermitian by
 * construction. Terms whose coefficient becomes exactly zero are erased.
 */
class Observable {
  public:
    using TermMap = std::map<PauliString, double>;

    explicit Observable(std::size_t num_qubits);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] double constant() const noexcept { return constant_; }
    [[nodiscard]] const TermMap &terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    /// True when there are no terms and the constant is zero.
    [[nodiscard]] bool is_zero() const noexcept {
        return terms_.empty() && constant_ == 0.0;
    }

    /// Coefficient of `p` (0 if absent). The identity string returns the constant.
    [[nodiscard]] double coefficient(const PauliString &p) const;

    /// Accumulates `coeff * p`. The identity string folds into the constant.
    Observable &add_term(double coeff, const PauliString &p);
    Observable &add_constant(double c) noexcept;

    /// Erases every term with |coeff| <= drop_below (exact zeros always go).
    Observable &simplify(double drop_below = 0.0);

    Observable &operator+=(const Observable &other);
    Observable &operator-=(const Observable &other);
    Observable &operator*=(double s);

    [[nodiscard]] std::string str() const;

    bool operator==(const Observable &) const = default;

  private:
    std::size_t num_qubits_;
    double constant_ = 0.0;
    TermMap terms_;
};

[[nodiscard]] Observable operator+(Observable a, const Observable &b);
[[nodiscard]] Observable operator-(Observable a, const Observable &b);
[[nodiscard]] Observable operator*(double s, Observable a);

/// Builds the Hermitian operator i(ab - ba).
[[nodiscard]] Observable commutator_i(const Observable &a, const Observable &b);

/// Dense 2^L x 2^L matrix; qubit 0 is the least significant bit of the row
/// and column index.
[[nodiscard]] Eigen::MatrixXcd to_dense(const Observable &obs,
                                        std::size_t max_qubits = kDenseQubitCap);
[[nodiscard]] Eigen::MatrixXcd to_dense(const PauliString &p, std::size_t num_qubits,
                                        std::size_t max_qubits = kDenseQubitCap);

} // namespace fqa
