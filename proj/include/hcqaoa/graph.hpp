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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"

namespace hcqaoa {

/// Unordered vertex pair stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Undirected simple graph on vertices 1..n.
class Graph {
  public:
    Graph(int n, const std::vector<Edge> &edges) : n_(n) {
        if (n < 3) {
            fail(ErrorKind::InvalidOrder,
                 "graph order " + std::to_string(n) + " < 3");
        }
        adjacency_.assign(static_cast<std::size_t>(n * n), false);
        for (const auto &[u, v] : edges) {
            if (u < 1 || u > n || v < 1 || v > n) {
                fail(ErrorKind::EndpointOutOfRange,
                     "edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") outside 1.." + std::to_string(n));
            }
            if (u == v) {
                fail(ErrorKind::MalformedInput,
                     "self-loop at vertex " + std::to_string(u));
            }
            edges_.insert(make_edge(u, v));
            adjacency_[slot(u, v)] = true;
            adjacency_[slot(v, u)] = true;
        }
    }

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] const std::set<Edge> &edges() const noexcept {
        return edges_;
    }
    [[nodiscard]] bool has_edge(int u, int v) const {
        return u >= 1 && u <= n_ && v >= 1 && v <= n_ && adjacency_[slot(u, v)];
    }
    /// Qubits used by the position encoding: (n-1)^2.
    [[nodiscard]] std::size_t num_qubits() const noexcept {
        return static_cast<std::size_t>((n_ - 1) * (n_ - 1));
    }

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

  private:
    [[nodiscard]] std::size_t slot(int u, int v) const {
        return static_cast<std::size_t>((u - 1) * n_ + (v - 1));
    }

    int n_;
    std::set<Edge> edges_;
    std::vector<bool> adjacency_;
};

/// Reads {"n": int, "edges": [[u,v], ...]}.
inline Graph parse_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::MalformedInput, e.what());
    }
    if (!doc.is_object() || !doc.contains("n") ||
        !doc["n"].is_number_integer() || !doc.contains("edges") ||
        !doc["edges"].is_array()) {
        fail(ErrorKind::MalformedInput,
             "expected object with integer 'n' and array 'edges'");
    }
    std::vector<Edge> edges;
    for (const auto &e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            fail(ErrorKind::MalformedInput, "edge must be [u, v] integers");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(doc["n"].get<int>(), edges);
}

inline nlohmann::json graph_to_json(const Graph &g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto &[u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    return {{"n", g.order()}, {"edges", edges}};
}

inline std::set<Edge> non_edges(const Graph &g) {
    std::set<Edge> out;
    for (int u = 1; u <= g.order(); ++u) {
        for (int v = u + 1; v <= g.order(); ++v) {
            if (!g.has_edge(u, v)) {
                out.emplace(u, v);
            }
        }
    }
    return out;
}

/// Binary variable x[v,j]: vertex v sits at cycle position j.
struct Var {
    int vertex;
    int position;
    friend auto operator<=>(const Var &, const Var &) = default;
};

/// 1-based qubit carrying x[v,j]; vertex 1 and position 1 are fixed.
inline std::size_t qubit_index(int v, int j, int n) {
    if (v < 2 || v > n || j < 2 || j > n) {
        fail(ErrorKind::IndexOutOfRange,
             "x[" + std::to_string(v) + "," + std::to_string(j) +
                 "] has no qubit for n=" + std::to_string(n));
    }
    return static_cast<std::size_t>((v - 2) * (n - 1) + (j - 1));
}

inline Var variable_of_qubit(std::size_t qubit, int n) {
    const auto block = static_cast<std::size_t>(n - 1);
    if (qubit < 1 || qubit > block * block) {
        fail(ErrorKind::IndexOutOfRange,
             "qubit " + std::to_string(qubit) + " outside the encoding");
    }
    return {static_cast<int>((qubit - 1) / block) + 2,
            static_cast<int>((qubit - 1) % block) + 2};
}

/// Measurement bitstring; character k (0-based) is qubit k+1, i.e. bit k of
/// the basis index.
class Assignment {
  public:
    explicit Assignment(std::string bits) : bits_(std::move(bits)) {
        if (bits_.find_first_not_of("01") != std::string::npos) {
            fail(ErrorKind::MalformedInput,
                 "assignment must contain only '0'/'1'");
        }
    }

    static Assignment from_index(std::uint64_t index, std::size_t num_qubits) {
        std::string bits(num_qubits, '0');
        for (std::size_t k = 0; k < num_qubits; ++k) {
            if ((index >> k) & 1U) {
                bits[k] = '1';
            }
        }
        return Assignment(std::move(bits));
    }

    [[nodiscard]] std::uint64_t to_index() const {
        std::uint64_t index = 0;
        for (std::size_t k = 0; k < bits_.size(); ++k) {
            if (bits_[k] == '1') {
                index |= std::uint64_t{1} << k;
            }
        }
        return index;
    }

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    /// Value of 1-based qubit.
    [[nodiscard]] bool qubit(std::size_t q) const { return bits_.at(q - 1) == '1'; }
    [[nodiscard]] const std::string &str() const noexcept { return bits_; }

    friend bool operator==(const Assignment &, const Assignment &) = default;

  private:
    std::string bits_;
};

inline std::string bitstring(std::uint64_t index, std::size_t num_qubits) {
    return Assignment::from_index(index, num_qubits).str();
}

enum class ConstraintClass { VertexUniqueness, PositionUniqueness, EdgeValidity };

inline constexpr std::string_view to_string(ConstraintClass c) {
    switch (c) {
    case ConstraintClass::VertexUniqueness:
        return "vertex-uniqueness";
    case ConstraintClass::PositionUniqueness:
        return "position-uniqueness";
    case ConstraintClass::EdgeValidity:
        return "edge-validity";
    }
    return "unknown";
}

struct Violation {
    ConstraintClass constraint;
    /// Offending vertices or positions; for edge validity, flattened
    /// (u, v) pairs of consecutive non-adjacent vertices.
    std::vector<int> indices;
};

struct DecodedTour {
    std::vector<int> order;
    std::optional<Violation> violation;

    [[nodiscard]] bool valid() const noexcept { return !violation.has_value(); }
};

/// Checks position uniqueness, then vertex uniqueness, then edge validity,
/// and reports the first class that fails.
inline DecodedTour decode(const Assignment &a, const Graph &g) {
    const int n = g.order();
    if (a.size() != g.num_qubits()) {
        fail(ErrorKind::LengthMismatch,
             "assignment length " + std::to_string(a.size()) + " != " +
                 std::to_string(g.num_qubits()));
    }
    auto x = [&](int v, int j) { return a.qubit(qubit_index(v, j, n)); };

    std::vector<int> bad;
    for (int j = 2; j <= n; ++j) {
        int count = 0;
        for (int v = 2; v <= n; ++v) {
            count += x(v, j) ? 1 : 0;
        }
        if (count != 1) {
            bad.push_back(j);
        }
    }
    if (!bad.empty()) {
        return {{}, Violation{ConstraintClass::PositionUniqueness, bad}};
    }
    std::vector<int> order(static_cast<std::size_t>(n), 0);
    order[0] = 1;
    for (int v = 2; v <= n; ++v) {
        int count = 0;
        for (int j = 2; j <= n; ++j) {
            if (x(v, j)) {
                ++count;
                order[static_cast<std::size_t>(j - 1)] = v;
            }
        }
        if (count != 1) {
            bad.push_back(v);
        }
    }
    if (!bad.empty()) {
        return {{}, Violation{ConstraintClass::VertexUniqueness, bad}};
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int u = order[i];
        const int v = order[(i + 1) % order.size()];
        if (!g.has_edge(u, v)) {
            bad.push_back(u);
            bad.push_back(v);
        }
    }
    if (!bad.empty()) {
        return {{}, Violation{ConstraintClass::EdgeValidity, bad}};
    }
    return {order, std::nullopt};
}

/// Inverse of decode for a tour given as a vertex order starting at 1.
inline Assignment encode(const std::vector<int> &order) {
    const int n = static_cast<int>(order.size());
    if (n < 3 || order.front() != 1) {
        fail(ErrorKind::InvalidArgument, "tour must start at vertex 1, n >= 3");
    }
    std::string bits(static_cast<std::size_t>((n - 1) * (n - 1)), '0');
    for (int j = 2; j <= n; ++j) {
        bits[qubit_index(order[static_cast<std::size_t>(j - 1)], j, n) - 1] =
            '1';
    }
    return Assignment(std::move(bits));
}

} // namespace hcqaoa
