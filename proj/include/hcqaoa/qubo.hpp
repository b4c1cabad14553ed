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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace hcqaoa {

/// Multilinear polynomial over the binary variables x[v,j]. Squares are
/// reduced with x*x = x on insertion and zero coefficients are dropped.
class QuboPolynomial {
  public:
    using VarPair = std::pair<Var, Var>;

    /// c + sum_i a_i x_i
    struct Affine {
        Rational constant{0};
        std::vector<std::pair<Var, Rational>> terms;
    };

    void add_constant(const Rational &c) { constant_ += c; }

    void add_linear(const Var &x, const Rational &c) {
        accumulate(linear_, x, c);
    }

    void add_quadratic(const Var &a, const Var &b, const Rational &c) {
        if (a == b) {
            add_linear(a, c);
            return;
        }
        accumulate(quadratic_, a < b ? VarPair{a, b} : VarPair{b, a}, c);
    }

    /// Adds the expanded product lhs * rhs.
    void add_product(const Affine &lhs, const Affine &rhs,
                     const Rational &scale = Rational{1}) {
        add_constant(scale * lhs.constant * rhs.constant);
        for (const auto &[x, a] : lhs.terms) {
            add_linear(x, scale * a * rhs.constant);
        }
        for (const auto &[x, b] : rhs.terms) {
            add_linear(x, scale * lhs.constant * b);
        }
        for (const auto &[x, a] : lhs.terms) {
            for (const auto &[y, b] : rhs.terms) {
                add_quadratic(x, y, scale * a * b);
            }
        }
    }

    void add(const QuboPolynomial &other, const Rational &scale = Rational{1}) {
        add_constant(scale * other.constant_);
        for (const auto &[x, c] : other.linear_) {
            add_linear(x, scale * c);
        }
        for (const auto &[xy, c] : other.quadratic_) {
            add_quadratic(xy.first, xy.second, scale * c);
        }
    }

    [[nodiscard]] const Rational &constant() const noexcept { return constant_; }
    [[nodiscard]] const std::map<Var, Rational> &linear() const noexcept {
        return linear_;
    }
    [[nodiscard]] const std::map<VarPair, Rational> &quadratic() const noexcept {
        return quadratic_;
    }
    [[nodiscard]] bool is_zero() const noexcept {
        return constant_ == 0 && linear_.empty() && quadratic_.empty();
    }

    /// Value at an assignment of the (n-1)^2 free variables.
    [[nodiscard]] Rational evaluate(const Assignment &a, int n) const {
        auto value = [&](const Var &x) {
            return a.qubit(qubit_index(x.vertex, x.position, n));
        };
        Rational total = constant_;
        for (const auto &[x, c] : linear_) {
            if (value(x)) {
                total += c;
            }
        }
        for (const auto &[xy, c] : quadratic_) {
            if (value(xy.first) && value(xy.second)) {
                total += c;
            }
        }
        return total;
    }

    friend bool operator==(const QuboPolynomial &,
                           const QuboPolynomial &) = default;

  private:
    template <class Map, class Key>
    static void accumulate(Map &map, const Key &key, const Rational &c) {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = map.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                map.erase(it);
            }
        }
    }

    Rational constant_{0};
    std::map<Var, Rational> linear_;
    std::map<VarPair, Rational> quadratic_;
};

/// Each vertex v >= 2 occupies exactly one position: sum_v (1 - sum_j x[v,j])^2.
/// The vertex-1 row vanishes because x[1,1] is fixed to 1.
inline QuboPolynomial vertex_uniqueness(int n) {
    if (n < 3) {
        fail(ErrorKind::InvalidOrder, "order must be >= 3");
    }
    QuboPolynomial q;
    for (int v = 2; v <= n; ++v) {
        QuboPolynomial::Affine row{Rational{1}, {}};
        for (int j = 2; j <= n; ++j) {
            row.terms.emplace_back(Var{v, j}, Rational{-1});
        }
        q.add_product(row, row);
    }
    return q;
}

/// Each position j >= 2 holds exactly one vertex.
inline QuboPolynomial position_uniqueness(int n) {
    if (n < 3) {
        fail(ErrorKind::InvalidOrder, "order must be >= 3");
    }
    QuboPolynomial q;
    for (int j = 2; j <= n; ++j) {
        QuboPolynomial::Affine column{Rational{1}, {}};
        for (int v = 2; v <= n; ++v) {
            column.terms.emplace_back(Var{v, j}, Rational{-1});
        }
        q.add_product(column, column);
    }
    return q;
}

/// Penalises consecutive placement of non-adjacent vertices. Pairs not
/// touching vertex 1 contribute x[u,j] x[v,j+1] in both orders; a
/// non-neighbour u of vertex 1 contributes x[u,2] + x[u,n].
inline QuboPolynomial edge_validity(const Graph &g) {
    const int n = g.order();
    QuboPolynomial q;
    for (const auto &[a, b] : non_edges(g)) {
        if (a == 1) {
            q.add_linear(Var{b, 2}, Rational{1});
            q.add_linear(Var{b, n}, Rational{1});
            continue;
        }
        for (const auto &[u, v] : {Edge{a, b}, Edge{b, a}}) {
            for (int j = 2; j <= n - 1; ++j) {
                q.add_quadratic(Var{u, j}, Var{v, j + 1}, Rational{1});
            }
        }
    }
    return q;
}

/// Per-term multipliers for the three penalty classes.
struct PenaltyWeights {
    Rational vertex{1};
    Rational position{1};
    Rational edge{1};

    static PenaltyWeights uniform(const Rational &a) { return {a, a, a}; }
};

inline QuboPolynomial assemble(const Graph &g, const PenaltyWeights &w) {
    if (w.vertex <= 0 || w.position <= 0 || w.edge <= 0) {
        fail(ErrorKind::NonPositiveWeight, "penalty weights must be > 0");
    }
    QuboPolynomial q;
    q.add(vertex_uniqueness(g.order()), w.vertex);
    q.add(position_uniqueness(g.order()), w.position);
    q.add(edge_validity(g), w.edge);
    return q;
}

inline QuboPolynomial assemble(const Graph &g, const Rational &a) {
    if (a <= 0) {
        fail(ErrorKind::NonPositiveWeight, "penalty weight must be > 0");
    }
    return assemble(g, PenaltyWeights::uniform(a));
}

} // namespace hcqaoa
