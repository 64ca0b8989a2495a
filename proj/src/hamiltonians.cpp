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

#include "fqa/hamiltonians.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include <fmt/format.h>

#include "fqa/error.hpp"

namespace fqa {

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
    if (num_vertices == 0 || num_vertices > kMaxPauliQubits) {
        throw InvalidArgument(
            fmt::format("vertex count must be in [1, {}], got {}", kMaxPauliQubits, num_vertices));
    }
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto &e : edges_) {
        if (e.u >= num_vertices || e.v >= num_vertices) {
            throw InvalidArgument(fmt::format("edge ({}, {}): vertex index out of range [0, {})",
                                              e.u, e.v, num_vertices));
        }
        if (e.u == e.v) {
            throw InvalidArgument(fmt::format("self loop on vertex {}", e.u));
        }
        if (!std::isfinite(e.weight)) {
            throw InvalidArgument(fmt::format("edge ({}, {}) has non-finite weight", e.u, e.v));
        }
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
            throw InvalidArgument(fmt::format("duplicate edge ({}, {})", e.u, e.v));
        }
    }
}

double Graph::total_weight() const noexcept {
    double w = 0.0;
    for (const auto &e : edges_) {
        w += e.weight;
    }
    return w;
}

double Graph::cut_value(std::uint64_t z) const noexcept {
    double cut = 0.0;
    for (const auto &e : edges_) {
        if (((z >> e.u) ^ (z >> e.v)) & 1u) {
            cut += e.weight;
        }
    }
    return cut;
}

Observable maxcut_hamiltonian(const Graph &g) {
    Observable h(g.num_vertices());
    for (const auto &e : g.edges()) {
        h.add_constant(-0.5 * e.weight);
        h.add_term(0.5 * e.weight, PauliString::pair(e.u, Pauli::Z, e.v, Pauli::Z));
    }
    return h;
}

Observable annni_hamiltonian(const AnnniParams &p) {
    if (p.length < 4) {
        throw InvalidArgument(fmt::format("ANNNI chain needs L >= 4, got {}", p.length));
    }
    if (!std::isfinite(p.kappa) || !std::isfinite(p.g) || !std::isfinite(p.j_coupling)) {
        throw InvalidArgument("ANNNI couplings must be finite");
    }
    const auto n = p.length;
    Observable h(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto q0 = static_cast<std::uint32_t>(j);
        const auto q1 = static_cast<std::uint32_t>((j + 1) % n);
        const auto q2 = static_cast<std::uint32_t>((j + 2) % n);
        h.add_term(-p.j_coupling, PauliString::pair(q0, Pauli::Z, q1, Pauli::Z));
        h.add_term(p.j_coupling * p.kappa, PauliString::pair(q0, Pauli::Y, q2, Pauli::Y));
        h.add_term(-p.j_coupling * p.g, PauliString::single(q0, Pauli::X));
    }
    return h;
}

Observable driver_hamiltonian(std::size_t num_qubits) {
    if (num_qubits == 0) {
        throw InvalidArgument("driver needs at least one qubit");
    }
    Observable h(num_qubits);
    for (std::size_t j = 0; j < num_qubits; ++j) {
        h.add_term(1.0, PauliString::single(static_cast<std::uint32_t>(j), Pauli::X));
    }
    return h;
}

namespace {

template <typename T> bool parse_integer(const std::string &tok, T &out) {
    const auto *first = tok.data();
    const auto *last = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

bool parse_real(const std::string &tok, double &out) {
    // from_chars for double is not available in libstdc++ 11.
    std::istringstream is(tok);
    is.imbue(std::locale::classic());
    is >> out;
    return !is.fail() && is.eof();
}

} // namespace

Graph load_graph(std::istream &in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> num_vertices;
    std::vector<Edge> edges;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;

    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string tok; ls >> tok;) {
            tokens.push_back(tok);
        }
        if (tokens.empty()) {
            continue;
        }

        if (!num_vertices) {
            std::size_t n = 0;
            if (tokens.size() != 1 || !parse_integer(tokens[0], n)) {
                throw ParseError(lineno, "expected a single vertex count");
            }
            if (n == 0 || n > kMaxPauliQubits) {
                throw ParseError(lineno, fmt::format("vertex count must be in [1, {}]",
                                                     kMaxPauliQubits));
            }
            num_vertices = n;
            continue;
        }

        if (tokens.size() != 3) {
            throw ParseError(lineno, "expected 'u v w'");
        }
        Edge e{};
        if (!parse_integer(tokens[0], e.u) || !parse_integer(tokens[1], e.v)) {
            throw ParseError(lineno, "vertex indices must be non-negative integers");
        }
        if (!parse_real(tokens[2], e.weight)) {
            throw ParseError(lineno, fmt::format("malformed weight '{}'", tokens[2]));
        }
        if (!std::isfinite(e.weight)) {
            throw ParseError(lineno, "non-finite weight");
        }
        if (e.u >= *num_vertices || e.v >= *num_vertices) {
            throw ParseError(lineno, fmt::format("vertex index out of range [0, {})",
                                                 *num_vertices));
        }
        if (e.u == e.v) {
            throw ParseError(lineno, "self loop");
        }
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
            throw ParseError(lineno, fmt::format("duplicate edge ({}, {})", e.u, e.v));
        }
        edges.push_back(e);
    }
    if (!num_vertices) {
        throw ParseError(lineno, "missing vertex count");
    }
    return Graph(*num_vertices, std::move(edges));
}

Graph load_graph_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(fmt::format("cannot open graph file '{}'", path));
    }
    return load_graph(in);
}

void write_graph(std::ostream &out, const Graph &g) {
    out << g.num_vertices() << '\n';
    for (const auto &e : g.edges()) {
        out << fmt::format("{} {} {}\n", e.u, e.v, e.weight);
    }
}

namespace {

// Unbiased draw from [0, bound) by rejection on the raw engine output.
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

} // namespace

Graph random_regular_graph(std::size_t num_vertices, std::size_t degree, std::uint64_t seed) {
    if (degree == 0 || degree >= num_vertices || (num_vertices * degree) % 2 != 0) {
        throw InvalidArgument(fmt::format("no simple {}-regular graph on {} vertices", degree,
                                          num_vertices));
    }
    std::mt19937_64 rng(seed);
    constexpr int kMaxAttempts = 100000;

    // Configuration model: shuffle the stubs and pair them up, rejecting
    // pairings with loops or parallel edges.
    std::vector<std::uint32_t> stubs;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        stubs.clear();
        for (std::size_t v = 0; v < num_vertices; ++v) {
            stubs.insert(stubs.end(), degree, static_cast<std::uint32_t>(v));
        }
        for (std::size_t k = stubs.size() - 1; k > 0; --k) {
            std::swap(stubs[k], stubs[uniform_below(rng, k + 1)]);
        }
        std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
        std::vector<Edge> edges;
        bool simple = true;
        for (std::size_t k = 0; k < stubs.size(); k += 2) {
            const auto a = std::min(stubs[k], stubs[k + 1]);
            const auto b = std::max(stubs[k], stubs[k + 1]);
            if (a == b || !seen.emplace(a, b).second) {
                simple = false;
                break;
            }
            edges.push_back({a, b, 1.0});
        }
        if (simple) {
            std::sort(edges.begin(), edges.end(), [](const Edge &x, const Edge &y) {
                return std::tie(x.u, x.v) < std::tie(y.u, y.v);
            });
            return Graph(num_vertices, std::move(edges));
        }
    }
    throw Error(fmt::format("failed to sample a simple {}-regular graph on {} vertices",
                            degree, num_vertices));
}

} // namespace fqa
