// Copyright 2026 The hcqaoa Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "qubo.hpp"
#include "rational.hpp"

namespace hcqaoa {

using QubitPair = std::pair<std::size_t, std::size_t>;

/// constant + sum_k h_k Z_k + sum_{j<k} J_jk Z_j Z_k over 1-based qubits.
struct IsingModel {
    std::size_t num_qubits = 0;
    Rational constant{0};
    std::map<std::size_t, Rational> linear;
    std::map<QubitPair, Rational> quadratic;

    void add_linear(std::size_t k, const Rational &c) {
        check(k);
        if (c == 0) {
            return;
        }
        if ((linear[k] += c) == 0) {
            linear.erase(k);
        }
    }

    void add_quadratic(std::size_t j, std::size_t k, const Rational &c) {
        check(j);
        check(k);
        if (j == k) {
            constant += c; // Z^2 = I
            return;
        }
        if (c == 0) {
            return;
        }
        const QubitPair key = j < k ? QubitPair{j, k} : QubitPair{k, j};
        if ((quadratic[key] += c) == 0) {
            quadratic.erase(key);
        }
    }

    [[nodiscard]] bool empty() const noexcept {
        return constant == 0 && linear.empty() && quadratic.empty();
    }

    /// Exact energy; a '1' bit means Z = -1.
    [[nodiscard]] Rational energy(const Assignment &a) const {
        if (a.size() != num_qubits) {
            fail(ErrorKind::LengthMismatch, "assignment length mismatch");
        }
        auto z = [&](std::size_t k) { return a.qubit(k) ? -1 : 1; };
        Rational total = constant;
        for (const auto &[k, c] : linear) {
            total += c * z(k);
        }
        for (const auto &[jk, c] : quadratic) {
            total += c * (z(jk.first) * z(jk.second));
        }
        return total;
    }

    friend bool operator==(const IsingModel &, const IsingModel &) = default;

  private:
    void check(std::size_t k) const {
        if (k < 1 || k > num_qubits) {
            fail(ErrorKind::IndexOutOfRange,
                 "qubit " + std::to_string(k) + " outside 1.." +
                     std::to_string(num_qubits));
        }
    }
};

/// Substitutes x -> (1 - Z)/2 and reduces Z^2 = I. Variable x[v,j] lands on
/// qubit_index(v, j, n).
inline IsingModel to_ising(const QuboPolynomial &q, int n) {
    IsingModel m;
    m.num_qubits = static_cast<std::size_t>((n - 1) * (n - 1));
    auto qubit = [&](const Var &x) {
        if (x.vertex < 2 || x.vertex > n || x.position < 2 ||
            x.position > n) {
            fail(ErrorKind::UnmappedVariable,
                 "x[" + std::to_string(x.vertex) + "," +
                     std::to_string(x.position) + "] outside the encoding");
        }
        return qubit_index(x.vertex, x.position, n);
    };
    m.constant = q.constant();
    for (const auto &[x, c] : q.linear()) {
        // c x = c/2 - (c/2) Z
        m.constant += c / 2;
        m.add_linear(qubit(x), -c / 2);
    }
    for (const auto &[xy, c] : q.quadratic()) {
        // c x y = c/4 (1 - Zx - Zy + Zx Zy)
        const auto a = qubit(xy.first);
        const auto b = qubit(xy.second);
        m.constant += c / 4;
        m.add_linear(a, -c / 4);
        m.add_linear(b, -c / 4);
        m.add_quadratic(a, b, c / 4);
    }
    return m;
}

/// Drops the identity term and scales the rest; argmin and level ordering are
/// unchanged for positive scale.
inline IsingModel strip_constant(const IsingModel &m,
                                 const std::optional<Rational> &rescale = {}) {
    const Rational s = rescale.value_or(Rational{1});
    if (s <= 0) {
        fail(ErrorKind::InvalidArgument, "rescale must be > 0");
    }
    IsingModel out;
    out.num_qubits = m.num_qubits;
    for (const auto &[k, c] : m.linear) {
        out.linear.emplace(k, c * s);
    }
    for (const auto &[jk, c] : m.quadratic) {
        out.quadratic.emplace(jk, c * s);
    }
    return out;
}

/// Smallest positive factor making every Z/ZZ coefficient an integer.
inline Rational integer_scale(const IsingModel &m) {
    std::int64_t l = 1;
    for (const auto &[k, c] : m.linear) {
        l = std::lcm(l, c.denominator());
    }
    for (const auto &[jk, c] : m.quadratic) {
        l = std::lcm(l, c.denominator());
    }
    return Rational{l};
}

/// Constant-free model with the smallest integer coefficients; for the
/// triangle this is Z1Z2 + Z3Z4 + Z1Z3 + Z2Z4.
inline IsingModel normalized(const IsingModel &m) {
    return strip_constant(m, integer_scale(m));
}

/// Energy = -(cut weight) for each assignment; qubit v holds vertex v.
inline IsingModel maxcut_ising(int num_vertices,
                               const std::map<Edge, Rational> &weights) {
    IsingModel m;
    m.num_qubits = static_cast<std::size_t>(num_vertices);
    for (const auto &[e, w] : weights) {
        const auto [u, v] = make_edge(e.first, e.second);
        if (u < 1 || v > num_vertices || u == v) {
            fail(ErrorKind::EndpointOutOfRange, "bad max-cut edge");
        }
        // w [x_u != x_v] = w (1 - Z_u Z_v) / 2
        m.constant -= w / 2;
        m.add_quadratic(static_cast<std::size_t>(u),
                        static_cast<std::size_t>(v), w / 2);
    }
    return m;
}

inline IsingModel maxcut_ising(const Graph &g,
                               const std::map<Edge, Rational> &weights) {
    std::map<Edge, Rational> canonical;
    for (const auto &[e, w] : weights) {
        const auto key = make_edge(e.first, e.second);
        if (!g.has_edge(key.first, key.second)) {
            fail(ErrorKind::InvalidArgument,
                 "weight given for non-edge (" + std::to_string(key.first) +
                     "," + std::to_string(key.second) + ")");
        }
        canonical[key] = w;
    }
    for (const auto &e : g.edges()) {
        if (!canonical.contains(e)) {
            fail(ErrorKind::WeightMissing,
                 "no weight for edge (" + std::to_string(e.first) + "," +
                     std::to_string(e.second) + ")");
        }
    }
    return maxcut_ising(g.order(), canonical);
}

struct PauliTerm {
    std::string pauli; ///< over {I,Z}; leftmost character is qubit 1
    Rational coeff;
    friend bool operator==(const PauliTerm &, const PauliTerm &) = default;
};

using PauliTermList = std::vector<PauliTerm>;

/// Linear terms by qubit, then quadratic terms lexicographically. The
/// identity entry is emitted first only when keep_constant is set.
inline PauliTermList to_term_list(const IsingModel &m,
                                  bool keep_constant = false) {
    PauliTermList out;
    const std::string identity(m.num_qubits, 'I');
    if (keep_constant && m.constant != 0) {
        out.push_back({identity, m.constant});
    }
    for (const auto &[k, c] : m.linear) {
        auto s = identity;
        s[k - 1] = 'Z';
        out.push_back({std::move(s), c});
    }
    for (const auto &[jk, c] : m.quadratic) {
        auto s = identity;
        s[jk.first - 1] = 'Z';
        s[jk.second - 1] = 'Z';
        out.push_back({std::move(s), c});
    }
    return out;
}

/// Graph -> exact Ising model with uniform or per-class penalty weights.
inline IsingModel compile(const Graph &g, const PenaltyWeights &w = {}) {
    return to_ising(assemble(g, w), g.order());
}

} // namespace hcqaoa
