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

#include <algorithm>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <hcqaoa/circuit.hpp>
#include <hcqaoa/graph.hpp>

namespace hcqaoa::testing {

inline Graph triangle() { return Graph(3, {{1, 2}, {2, 3}, {3, 1}}); }
inline Graph square() { return Graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }
inline Graph path3() { return Graph(3, {{1, 2}, {2, 3}}); }
inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            e.emplace_back(u, v);
        }
    }
    return Graph(n, e);
}

/// Every simple graph on n labelled vertices.
inline std::vector<Graph> all_graphs(int n) {
    const auto pairs = complete(n).edges();
    const std::vector<Edge> all(pairs.begin(), pairs.end());
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
        std::vector<Edge> e;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if ((mask >> i) & 1U) {
                e.push_back(all[i]);
            }
        }
        out.emplace_back(n, e);
    }
    return out;
}

inline Graph random_graph(int n, std::uint64_t seed, double density = 0.6) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(density);
    std::vector<Edge> e;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (keep(rng)) {
                e.emplace_back(u, v);
            }
        }
    }
    return Graph(n, e);
}

/// Tours 1 -> ... as vertex orders, found by brute force.
inline std::vector<std::vector<int>> hamiltonian_cycles(const Graph &g) {
    std::vector<int> rest(static_cast<std::size_t>(g.order() - 1));
    std::iota(rest.begin(), rest.end(), 2);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> order{1};
        order.insert(order.end(), rest.begin(), rest.end());
        bool ok = true;
        for (std::size_t i = 0; i < order.size(); ++i) {
            ok = ok && g.has_edge(order[i], order[(i + 1) % order.size()]);
        }
        if (ok) {
            out.push_back(order);
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

inline std::set<std::string> cycle_encodings(const Graph &g) {
    std::set<std::string> out;
    for (const auto &order : hamiltonian_cycles(g)) {
        out.insert(encode(order).str());
    }
    return out;
}

inline std::string read_file(const std::string &path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string data_path(const std::string &name) {
    return std::string(HCQAOA_DATA_DIR) + "/" + name;
}

// Dense reference simulator built from Kronecker products.

using Complex = std::complex<double>;

struct Dense {
    std::size_t dim = 1;
    std::vector<Complex> a{1.0};

    static Dense identity(std::size_t d) {
        Dense m{d, std::vector<Complex>(d * d, 0.0)};
        for (std::size_t i = 0; i < d; ++i) {
            m.a[i * d + i] = 1.0;
        }
        return m;
    }
    Complex operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

inline Dense kron(const Dense &x, const Dense &y) {
    Dense m{x.dim * y.dim, std::vector<Complex>(x.dim * y.dim * x.dim * y.dim)};
    for (std::size_t i = 0; i < x.dim; ++i) {
        for (std::size_t j = 0; j < x.dim; ++j) {
            for (std::size_t k = 0; k < y.dim; ++k) {
                for (std::size_t l = 0; l < y.dim; ++l) {
                    m.a[(i * y.dim + k) * m.dim + j * y.dim + l] = x(i, j) * y(k, l);
                }
            }
        }
    }
    return m;
}

inline Dense operator*(const Dense &x, const Dense &y) {
    Dense m{x.dim, std::vector<Complex>(x.dim * x.dim, 0.0)};
    for (std::size_t i = 0; i < x.dim; ++i) {
        for (std::size_t k = 0; k < x.dim; ++k) {
            for (std::size_t j = 0; j < x.dim; ++j) {
                m.a[i * x.dim + j] += x(i, k) * y(k, j);
            }
        }
    }
    return m;
}

inline Dense operator+(Dense x, const Dense &y) {
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        x.a[i] += y.a[i];
    }
    return x;
}

inline Dense mat2(Complex a, Complex b, Complex c, Complex d) { return {2, {a, b, c, d}}; }

/// Qubit k (1-based) is bit k-1 of the basis index, so qubit q is the
/// leftmost Kronecker factor.
inline Dense embed(std::size_t q, const std::vector<std::pair<std::size_t, Dense>> &ops) {
    Dense m;
    for (std::size_t k = q; k >= 1; --k) {
        Dense f = Dense::identity(2);
        for (const auto &[qubit, op] : ops) {
            if (qubit == k) {
                f = op;
            }
        }
        m = kron(m, f);
    }
    return m;
}

inline Dense gate_unitary(const Gate &g, std::size_t q) {
    const double t = g.angle.value;
    const Complex i{0.0, 1.0};
    const double c = std::cos(t / 2);
    const double s = std::sin(t / 2);
    switch (g.kind) {
    case GateKind::H: {
        const double r = 1.0 / std::sqrt(2.0);
        return embed(q, {{g.qubits[0], mat2(r, r, r, -r)}});
    }
    case GateKind::RX:
        return embed(q, {{g.qubits[0], mat2(c, -i * s, -i * s, c)}});
    case GateKind::RY:
        return embed(q, {{g.qubits[0], mat2(c, -s, s, c)}});
    case GateKind::RZ:
        return embed(q, {{g.qubits[0], mat2(std::exp(-i * (t / 2)), 0.0, 0.0,
                                            std::exp(i * (t / 2)))}});
    case GateKind::CNOT:
        return embed(q, {{g.qubits[0], mat2(1, 0, 0, 0)}}) +
               embed(q, {{g.qubits[0], mat2(0, 0, 0, 1)}, {g.qubits[1], mat2(0, 1, 1, 0)}});
    }
    return Dense::identity(std::size_t{1} << q);
}

inline std::vector<Complex> dense_simulate(const ParamCircuit &c) {
    const std::size_t dim = std::size_t{1} << c.num_qubits;
    Dense u = Dense::identity(dim);
    for (const auto &g : c.gates) {
        u = gate_unitary(g, c.num_qubits) * u;
    }
    std::vector<Complex> out(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        out[r] = u(r, 0);
    }
    return out;
}

inline ParamCircuit random_circuit(std::size_t q, std::size_t num_gates, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> kind(0, q > 1 ? 4 : 3);
    std::uniform_int_distribution<std::size_t> qubit(1, q);
    std::uniform_real_distribution<double> angle(-4.0, 4.0);
    ParamCircuit c;
    c.num_qubits = q;
    for (std::size_t n = 0; n < num_gates; ++n) {
        const std::size_t a = qubit(rng);
        switch (kind(rng)) {
        case 0:
            c.gates.push_back(Gate::h(a));
            break;
        case 1:
            c.gates.push_back(Gate::rx(a, Angle::literal(angle(rng))));
            break;
        case 2:
            c.gates.push_back(Gate::ry(a, Angle::literal(angle(rng))));
            break;
        case 3:
            c.gates.push_back(Gate::rz(a, Angle::literal(angle(rng))));
            break;
        default: {
            std::size_t b = qubit(rng);
            while (b == a) {
                b = qubit(rng);
            }
            c.gates.push_back(Gate::cnot(a, b));
        }
        }
    }
    return c;
}

} // namespace hcqaoa::testing
