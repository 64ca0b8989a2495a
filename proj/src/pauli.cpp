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

#include "fqa/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "fqa/error.hpp"

namespace fqa {

namespace {

constexpr double kImagResidueTolerance = 1e-12;

// Single-qubit product a*b = i^power * c. `c` is empty when a == b.
struct SiteProduct {
    unsigned power;
    std::optional<Pauli> op;
};

SiteProduct multiply_site(Pauli a, Pauli b) {
    if (a == b) {
        return {0, std::nullopt};
    }
    const auto ia = static_cast<int>(a);
    const auto ib = static_cast<int>(b);
    const auto c = static_cast<Pauli>(6 - ia - ib);
    // XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
    const bool cyclic = (ib - ia + 3) % 3 == 1;
    return {cyclic ? 1u : 3u, c};
}

} // namespace

char to_char(Pauli p) noexcept {
    switch (p) {
    case Pauli::X:
        return 'X';
    case Pauli::Y:
        return 'Y';
    case Pauli::Z:
        return 'Z';
    }
    return '?';
}

PauliString::PauliString(std::initializer_list<PauliFactor> factors)
    : PauliString(std::vector<PauliFactor>(factors)) {}

PauliString::PauliString(std::vector<PauliFactor> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (factors_[k].qubit >= kMaxPauliQubits) {
            throw InvalidArgument(fmt::format("qubit index {} exceeds the {}-qubit limit",
                                              factors_[k].qubit, kMaxPauliQubits));
        }
        if (k > 0 && factors_[k].qubit == factors_[k - 1].qubit) {
            throw InvalidArgument(
                fmt::format("qubit {} appears twice in a Pauli string", factors_[k].qubit));
        }
    }
}

std::optional<Pauli> PauliString::at(std::uint32_t qubit) const {
    const auto it = std::lower_bound(
        factors_.begin(), factors_.end(), qubit,
        [](const PauliFactor &f, std::uint32_t q) { return f.qubit < q; });
    if (it == factors_.end() || it->qubit != qubit) {
        return std::nullopt;
    }
    return it->op;
}

std::uint64_t PauliString::flip_mask() const noexcept {
    std::uint64_t mask = 0;
    for (const auto &f : factors_) {
        if (f.op != Pauli::Z) {
            mask |= std::uint64_t{1} << f.qubit;
        }
    }
    return mask;
}

std::uint64_t PauliString::phase_mask() const noexcept {
    std::uint64_t mask = 0;
    for (const auto &f : factors_) {
        if (f.op != Pauli::X) {
            mask |= std::uint64_t{1} << f.qubit;
        }
    }
    return mask;
}

unsigned PauliString::y_count() const noexcept {
    return static_cast<unsigned>(std::count_if(
        factors_.begin(), factors_.end(), [](const PauliFactor &f) { return f.op == Pauli::Y; }));
}

std::string PauliString::str() const {
    if (factors_.empty()) {
        return "I";
    }
    std::string out;
    for (const auto &f : factors_) {
        if (!out.empty()) {
            out += ' ';
        }
        out += to_char(f.op);
        out += std::to_string(f.qubit);
    }
    return out;
}

std::complex<double> PauliProduct::phase() const noexcept {
    switch (i_power & 3u) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

PauliProduct pauli_product(const PauliString &p, const PauliString &q) {
    const auto &a = p.factors();
    const auto &b = q.factors();
    std::vector<PauliFactor> out;
    out.reserve(a.size() + b.size());
    unsigned power = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].qubit < b[j].qubit)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].qubit < a[i].qubit) {
            out.push_back(b[j++]);
        } else {
            const auto site = multiply_site(a[i].op, b[j].op);
            power += site.power;
            if (site.op) {
                out.push_back({a[i].qubit, *site.op});
            }
            ++i;
            ++j;
        }
    }
    // `out` is already sorted and duplicate-free.
    return {power & 3u, PauliString(std::move(out))};
}

bool commutes(const PauliString &p, const PauliString &q) noexcept {
    // Two strings anticommute iff they differ non-trivially on an odd number
    // of shared qubits.
    const auto &a = p.factors();
    const auto &b = q.factors();
    unsigned clashes = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].qubit < b[j].qubit) {
            ++i;
        } else if (b[j].qubit < a[i].qubit) {
            ++j;
        } else {
            clashes += a[i].op != b[j].op ? 1u : 0u;
            ++i;
            ++j;
        }
    }
    return clashes % 2 == 0;
}

Observable::Observable(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxPauliQubits) {
        throw InvalidArgument(
            fmt::format("register size must be in [1, {}], got {}", kMaxPauliQubits, num_qubits));
    }
}

double Observable::coefficient(const PauliString &p) const {
    if (p.is_identity()) {
        return constant_;
    }
    const auto it = terms_.find(p);
    return it == terms_.end() ? 0.0 : it->second;
}

Observable &Observable::add_term(double coeff, const PauliString &p) {
    if (!std::isfinite(coeff)) {
        throw InvalidArgument(fmt::format("non-finite coefficient for {}", p.str()));
    }
    if (p.span() > num_qubits_) {
        throw InvalidArgument(fmt::format("term {} does not fit a {}-qubit register", p.str(),
                                          num_qubits_));
    }
    if (p.is_identity()) {
        constant_ += coeff;
        return *this;
    }
    if (coeff == 0.0) {
        return *this;
    }
    auto [it, inserted] = terms_.try_emplace(p, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0.0) {
            terms_.erase(it);
        }
    }
    return *this;
}

Observable &Observable::add_constant(double c) noexcept {
    constant_ += c;
    return *this;
}

Observable &Observable::simplify(double drop_below) {
    std::erase_if(terms_, [drop_below](const auto &kv) {
        return kv.second == 0.0 || std::abs(kv.second) <= drop_below;
    });
    if (std::abs(constant_) <= drop_below) {
        constant_ = 0.0;
    }
    return *this;
}

Observable &Observable::operator+=(const Observable &other) {
    if (other.num_qubits_ != num_qubits_) {
        throw RegisterMismatch(fmt::format("cannot add observables over {} and {} qubits",
                                           num_qubits_, other.num_qubits_));
    }
    constant_ += other.constant_;
    for (const auto &[p, c] : other.terms_) {
        add_term(c, p);
    }
    return *this;
}

Observable &Observable::operator-=(const Observable &other) {
    return *this += -1.0 * other;
}

Observable &Observable::operator*=(double s) {
    constant_ *= s;
    for (auto &[p, c] : terms_) {
        c *= s;
    }
    return simplify();
}

std::string Observable::str() const {
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    if (constant_ != 0.0 || terms_.empty()) {
        os << constant_;
        first = false;
    }
    for (const auto &[p, c] : terms_) {
        if (!first) {
            os << (c < 0 ? " - " : " + ") << std::abs(c);
        } else {
            os << c;
        }
        os << "*" << p.str();
        first = false;
    }
    return os.str();
}

Observable operator+(Observable a, const Observable &b) { return a += b; }
Observable operator-(Observable a, const Observable &b) { return a -= b; }
Observable operator*(double s, Observable a) { return a *= s; }

Observable commutator_i(const Observable &a, const Observable &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw RegisterMismatch(fmt::format("commutator of observables over {} and {} qubits",
                                           a.num_qubits(), b.num_qubits()));
    }
    // Constants commute with everything, and so do commuting string pairs.
    // For an anticommuting pair pq = phase*r and qp = -phase*r, hence
    // i[p,q] = 2i*phase*r.
    std::map<PauliString, std::complex<double>> acc;
    const std::complex<double> two_i{0.0, 2.0};
    for (const auto &[p, cp] : a.terms()) {
        for (const auto &[q, cq] : b.terms()) {
            if (commutes(p, q)) {
                continue;
            }
            auto prod = pauli_product(p, q);
            acc[std::move(prod.string)] += two_i * prod.phase() * (cp * cq);
        }
    }

    Observable out(a.num_qubits());
    for (const auto &[r, c] : acc) {
        if (std::abs(c.imag()) > kImagResidueTolerance) {
            throw NumericalError(fmt::format(
                "commutator produced imaginary coefficient {} on {}", c.imag(), r.str()));
        }
        out.add_term(c.real(), r);
    }
    return out;
}

Eigen::MatrixXcd to_dense(const PauliString &p, std::size_t num_qubits, std::size_t max_qubits) {
    if (num_qubits > max_qubits) {
        throw SizeError(fmt::format("dense matrix over {} qubits exceeds cap of {}", num_qubits,
                                    max_qubits));
    }
    if (p.span() > num_qubits) {
        throw InvalidArgument(
            fmt::format("{} does not fit a {}-qubit register", p.str(), num_qubits));
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    const auto flip = p.flip_mask();
    const auto zy = p.phase_mask();
    const auto base = PauliProduct{p.y_count() & 3u, {}}.phase();
    for (std::size_t z = 0; z < dim; ++z) {
        const bool odd = std::popcount(z & zy) & 1;
        m(z ^ flip, z) = odd ? -base : base;
    }
    return m;
}

Eigen::MatrixXcd to_dense(const Observable &obs, std::size_t max_qubits) {
    const auto n = obs.num_qubits();
    if (n > max_qubits) {
        throw SizeError(
            fmt::format("dense matrix over {} qubits exceeds cap of {}", n, max_qubits));
    }
    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    m.diagonal().setConstant(obs.constant());
    for (const auto &[p, c] : obs.terms()) {
        const auto flip = p.flip_mask();
        const auto zy = p.phase_mask();
        const auto base = c * PauliProduct{p.y_count() & 3u, {}}.phase();
        for (std::size_t z = 0; z < dim; ++z) {
            const bool odd = std::popcount(z & zy) & 1;
            m(z ^ flip, z) += odd ? -base : base;
        }
    }
    return m;
}

} // namespace fqa
