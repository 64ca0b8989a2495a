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

#include "fqa/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include <fmt/format.h>

#include "fqa/error.hpp"

namespace fqa {

namespace {

using Index = std::int64_t;

// Reductions are split into fixed-size chunks whose partial sums are added
// in order, so results do not depend on the thread count.
constexpr std::size_t kReduceChunk = std::size_t{1} << 12;

// Diagonal energies are tabulated up to this register size (8 MiB).
constexpr std::size_t kEnergyTableQubits = 20;

constexpr double kImagResidueTolerance = 1e-9;

template <typename F> Amplitude chunked_sum(std::size_t n, F &&partial_sum) {
    const auto chunks = static_cast<Index>((n + kReduceChunk - 1) / kReduceChunk);
    std::vector<Amplitude> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static) if (chunks > 1)
    for (Index c = 0; c < chunks; ++c) {
        const auto begin = static_cast<std::size_t>(c) * kReduceChunk;
        const auto end = std::min(n, begin + kReduceChunk);
        partial[static_cast<std::size_t>(c)] = partial_sum(begin, end);
    }
    Amplitude total{0.0, 0.0};
    for (const auto &p : partial) {
        total += p;
    }
    return total;
}

// Inserts a zero bit at position `bit` of k.
constexpr std::uint64_t insert_zero(std::uint64_t k, std::size_t bit) noexcept {
    const std::uint64_t low = k & ((std::uint64_t{1} << bit) - 1);
    return ((k >> bit) << (bit + 1)) | low;
}

void check_register(std::size_t num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxStatevectorQubits) {
        throw InvalidArgument(fmt::format("statevector register must be in [1, {}] qubits, got {}",
                                          kMaxStatevectorQubits, num_qubits));
    }
}

} // namespace

Statevector::Statevector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    check_register(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

Statevector::Statevector(std::size_t num_qubits, std::vector<Amplitude> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {}

Statevector Statevector::uniform_superposition(std::size_t num_qubits) {
    check_register(num_qubits);
    const double amp = std::pow(2.0, -0.5 * static_cast<double>(num_qubits));
    return {num_qubits, std::vector<Amplitude>(std::size_t{1} << num_qubits, Amplitude{amp, 0.0})};
}

Statevector Statevector::basis_state(std::size_t num_qubits, std::uint64_t index) {
    Statevector s(num_qubits);
    if (index >= s.dimension()) {
        throw InvalidArgument(fmt::format("basis index {} out of range for {} qubits", index,
                                          num_qubits));
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

Statevector Statevector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    const auto n = amplitudes.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw InvalidArgument(
            fmt::format("amplitude count must be a power of two >= 2, got {}", n));
    }
    const auto num_qubits = static_cast<std::size_t>(std::countr_zero(n));
    check_register(num_qubits);
    return {num_qubits, std::move(amplitudes)};
}

double Statevector::norm_squared() const {
    return chunked_sum(amps_.size(),
                       [this](std::size_t b, std::size_t e) {
                           double acc = 0.0;
                           for (std::size_t z = b; z < e; ++z) {
                               acc += std::norm(amps_[z]);
                           }
                           return Amplitude{acc, 0.0};
                       })
        .real();
}

void Statevector::check_qubit(std::size_t j) const {
    if (j >= num_qubits_) {
        throw InvalidArgument(
            fmt::format("qubit index {} out of range for {} qubits", j, num_qubits_));
    }
}

void Statevector::apply_zz_phase(std::size_t i, std::size_t j, double theta) {
    check_qubit(i);
    check_qubit(j);
    if (i == j) {
        throw InvalidArgument(fmt::format("ZZ phase needs distinct qubits, got {} twice", i));
    }
    apply_z_string_phase((std::uint64_t{1} << i) | (std::uint64_t{1} << j), theta);
}

void Statevector::apply_z_string_phase(std::uint64_t mask, double theta) {
    if (mask >> num_qubits_ != 0) {
        throw InvalidArgument(fmt::format("Z mask {:#x} exceeds {} qubits", mask, num_qubits_));
    }
    const Amplitude even = std::polar(1.0, -theta);
    const Amplitude odd = std::polar(1.0, theta);
    const auto dim = static_cast<Index>(amps_.size());
#pragma omp parallel for schedule(static)
    for (Index z = 0; z < dim; ++z) {
        const bool parity = std::popcount(static_cast<std::uint64_t>(z) & mask) & 1;
        amps_[static_cast<std::size_t>(z)] *= parity ? odd : even;
    }
}

void Statevector::apply_rx(std::size_t j, double theta) {
    check_qubit(j);
    const double c = std::cos(theta);
    const Amplitude mis{0.0, -std::sin(theta)};
    const std::uint64_t stride = std::uint64_t{1} << j;
    const auto half = static_cast<Index>(amps_.size() / 2);
#pragma omp parallel for schedule(static)
    for (Index k = 0; k < half; ++k) {
        const auto i0 = insert_zero(static_cast<std::uint64_t>(k), j);
        const auto i1 = i0 | stride;
        const Amplitude v0 = amps_[i0];
        const Amplitude v1 = amps_[i1];
        amps_[i0] = c * v0 + mis * v1;
        amps_[i1] = mis * v0 + c * v1;
    }
}

void Statevector::apply_yy(std::size_t i, std::size_t j, double theta) {
    check_qubit(i);
    check_qubit(j);
    if (i == j) {
        throw InvalidArgument(fmt::format("YY rotation needs distinct qubits, got {} twice", i));
    }
    // On the (b_i, b_j) block: YY|00> = -|11>, YY|11> = -|00>,
    // YY|01> = |10>, YY|10> = |01>.
    const double c = std::cos(theta);
    const Amplitude is{0.0, std::sin(theta)};
    const auto lo = std::min(i, j);
    const auto hi = std::max(i, j);
    const std::uint64_t bi = std::uint64_t{1} << i;
    const std::uint64_t bj = std::uint64_t{1} << j;
    const auto quarter = static_cast<Index>(amps_.size() / 4);
#pragma omp parallel for schedule(static)
    for (Index k = 0; k < quarter; ++k) {
        const auto i00 = insert_zero(insert_zero(static_cast<std::uint64_t>(k), lo), hi);
        const auto i01 = i00 | bi;
        const auto i10 = i00 | bj;
        const auto i11 = i00 | bi | bj;
        const Amplitude v00 = amps_[i00];
        const Amplitude v01 = amps_[i01];
        const Amplitude v10 = amps_[i10];
        const Amplitude v11 = amps_[i11];
        amps_[i00] = c * v00 + is * v11;
        amps_[i11] = c * v11 + is * v00;
        amps_[i01] = c * v01 - is * v10;
        amps_[i10] = c * v10 - is * v01;
    }
}

void Statevector::apply_diagonal(std::span<const double> energies, double duration) {
    if (energies.size() != amps_.size()) {
        throw RegisterMismatch(fmt::format("diagonal of size {} applied to dimension {}",
                                           energies.size(), amps_.size()));
    }
    const auto dim = static_cast<Index>(amps_.size());
#pragma omp parallel for schedule(static)
    for (Index z = 0; z < dim; ++z) {
        const auto u = static_cast<std::size_t>(z);
        amps_[u] *= std::polar(1.0, -duration * energies[u]);
    }
}

void Statevector::scale(Amplitude phase) noexcept {
    for (auto &a : amps_) {
        a *= phase;
    }
}

Amplitude inner_product(const Statevector &bra, const Statevector &ket) {
    if (bra.num_qubits() != ket.num_qubits()) {
        throw RegisterMismatch(fmt::format("inner product of {}- and {}-qubit states",
                                           bra.num_qubits(), ket.num_qubits()));
    }
    const auto a = bra.amplitudes();
    const auto b = ket.amplitudes();
    return chunked_sum(a.size(), [&](std::size_t lo, std::size_t hi) {
        Amplitude acc{0.0, 0.0};
        for (std::size_t z = lo; z < hi; ++z) {
            acc += std::conj(a[z]) * b[z];
        }
        return acc;
    });
}

double fidelity(const Statevector &a, const Statevector &b) {
    return std::norm(inner_product(a, b));
}

CompiledObservable::CompiledObservable(const Observable &obs)
    : num_qubits_(obs.num_qubits()), constant_(obs.constant()) {
    std::map<std::uint64_t, std::vector<Term>> by_flip;
    for (const auto &[p, c] : obs.terms()) {
        const auto phase = PauliProduct{p.y_count() & 3u, {}}.phase();
        by_flip[p.flip_mask()].push_back({p.phase_mask(), c * phase});
    }
    groups_.reserve(by_flip.size());
    for (auto &[flip, terms] : by_flip) {
        groups_.push_back({flip, std::move(terms)});
    }
}

double CompiledObservable::expectation(const Statevector &s) const {
    if (s.num_qubits() != num_qubits_) {
        throw RegisterMismatch(fmt::format("expectation of a {}-qubit observable on {} qubits",
                                           num_qubits_, s.num_qubits()));
    }
    const auto amps = s.amplitudes();
    Amplitude total{0.0, 0.0};
    for (const auto &group : groups_) {
        const auto flip = group.flip_mask;
        const auto &terms = group.terms;
        total += chunked_sum(amps.size(), [&](std::size_t lo, std::size_t hi) {
            Amplitude acc{0.0, 0.0};
            for (std::size_t z = lo; z < hi; ++z) {
                Amplitude weight{0.0, 0.0};
                for (const auto &t : terms) {
                    const bool odd = std::popcount(z & t.phase_mask) & 1;
                    weight += odd ? -t.coeff : t.coeff;
                }
                acc += std::conj(amps[z ^ flip]) * weight * amps[z];
            }
            return acc;
        });
    }
    if (std::abs(total.imag()) > kImagResidueTolerance) {
        throw NumericalError(
            fmt::format("expectation has imaginary residue {} (non-Hermitian input?)",
                        total.imag()));
    }
    return total.real() + constant_ * s.norm_squared();
}

double expectation(const Statevector &s, const Observable &obs) {
    return CompiledObservable(obs).expectation(s);
}

double success_probability(const Statevector &s, std::span<const std::uint64_t> solutions) {
    if (solutions.empty()) {
        throw InvalidArgument("success probability needs a non-empty solution set");
    }
    double p = 0.0;
    for (const auto z : solutions) {
        if (z >= s.dimension()) {
            throw InvalidArgument(fmt::format("solution index {} out of range", z));
        }
        p += std::norm(s[z]);
    }
    return p;
}

PropagatorPlan::PropagatorPlan(const Observable &h, Splitting splitting)
    : num_qubits_(h.num_qubits()), splitting_(splitting), constant_(h.constant()) {
    if (num_qubits_ > kMaxStatevectorQubits) {
        throw InvalidArgument(fmt::format("propagator over {} qubits exceeds the {}-qubit cap",
                                          num_qubits_, kMaxStatevectorQubits));
    }
    for (const auto &[p, c] : h.terms()) {
        const auto &f = p.factors();
        if (p.is_diagonal()) {
            z_.push_back({p.phase_mask(), c});
        } else if (f.size() == 2 && f[0].op == Pauli::Y && f[1].op == Pauli::Y) {
            yy_.push_back({f[0].qubit, f[1].qubit, c});
        } else if (f.size() == 1 && f[0].op == Pauli::X) {
            x_.push_back({f[0].qubit, c});
        } else {
            throw InvalidArgument(fmt::format(
                "unsupported term shape {} (need Z-type, YY pair, or single X)", p.str()));
        }
    }
    if (!z_.empty() && num_qubits_ <= kEnergyTableQubits) {
        const std::size_t dim = std::size_t{1} << num_qubits_;
        energies_.resize(dim);
        for (std::size_t z = 0; z < dim; ++z) {
            energies_[z] = diagonal_energy(z);
        }
    }
}

double PropagatorPlan::diagonal_energy(std::uint64_t z) const noexcept {
    double e = constant_;
    for (const auto &t : z_) {
        e += (std::popcount(z & t.mask) & 1) ? -t.coeff : t.coeff;
    }
    return e;
}

void PropagatorPlan::apply_diagonal_group(Statevector &s, double duration) const {
    if (!energies_.empty()) {
        s.apply_diagonal(energies_, duration);
    } else if (!z_.empty()) {
        auto amps = s.amplitudes();
        const auto dim = static_cast<Index>(amps.size());
#pragma omp parallel for schedule(static)
        for (Index z = 0; z < dim; ++z) {
            const auto u = static_cast<std::uint64_t>(z);
            amps[u] *= std::polar(1.0, -duration * diagonal_energy(u));
        }
    } else if (constant_ != 0.0) {
        s.scale(std::polar(1.0, -duration * constant_));
    }
}

void PropagatorPlan::apply_yy_group(Statevector &s, double duration) const {
    for (const auto &t : yy_) {
        s.apply_yy(t.i, t.j, t.coeff * duration);
    }
}

void PropagatorPlan::apply_x_group(Statevector &s, double duration) const {
    for (const auto &t : x_) {
        s.apply_rx(t.j, t.coeff * duration);
    }
}

void PropagatorPlan::apply(Statevector &s, double duration) const {
    if (s.num_qubits() != num_qubits_) {
        throw RegisterMismatch(fmt::format("{}-qubit propagator applied to {} qubits",
                                           num_qubits_, s.num_qubits()));
    }
    if (!std::isfinite(duration)) {
        throw InvalidArgument("propagator duration must be finite");
    }
    if (splitting_ == Splitting::first_order || is_exact()) {
        apply_diagonal_group(s, duration);
        apply_yy_group(s, duration);
        apply_x_group(s, duration);
        return;
    }
    const double half = 0.5 * duration;
    apply_diagonal_group(s, half);
    apply_yy_group(s, half);
    apply_x_group(s, duration);
    apply_yy_group(s, half);
    apply_diagonal_group(s, half);
}

} // namespace fqa
