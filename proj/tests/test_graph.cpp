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

#include <catch2/catch_amalgamated.hpp>

#include <hcqaoa/graph.hpp>
#include <hcqaoa/hamiltonian.hpp>

#include "support.hpp"

using namespace hcqaoa;
using namespace hcqaoa::testing;

namespace {

ErrorKind kind_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("no hcqaoa::Error thrown");
    return ErrorKind::InvalidArgument;
}

} // namespace

TEST_CASE("parse_graph reads order and edges") {
    const auto g = parse_graph(R"({"n":3,"edges":[[1,2],[2,3],[3,1]]})");
    CHECK(g.order() == 3);
    CHECK(g.edges().size() == 3);
    CHECK(g == triangle());
}

TEST_CASE("parse_graph symmetrizes duplicate edges") {
    const auto g = parse_graph(R"({"n":4,"edges":[[1,2],[2,1]]})");
    CHECK(g.order() == 4);
    CHECK(g.edges() == std::set<Edge>{{1, 2}});
    CHECK(g.has_edge(2, 1));
}

TEST_CASE("parse_graph rejects bad input") {
    CHECK(kind_of([] { parse_graph(R"({"n":2,"edges":[[1,2]]})"); }) ==
          ErrorKind::InvalidOrder);
    CHECK(kind_of([] { parse_graph(R"({"n":3,"edges":[[1,4]]})"); }) ==
          ErrorKind::EndpointOutOfRange);
    CHECK(kind_of([] { parse_graph(R"({"n":3,"edges":[[0,1]]})"); }) ==
          ErrorKind::EndpointOutOfRange);
    CHECK(kind_of([] { parse_graph(R"({"n":3,"edges":[[2,2]]})"); }) ==
          ErrorKind::MalformedInput);
    CHECK(kind_of([] { parse_graph("{not json"); }) == ErrorKind::MalformedInput);
    CHECK(kind_of([] { parse_graph(R"({"edges":[]})"); }) == ErrorKind::MalformedInput);
    CHECK(kind_of([] { parse_graph(R"({"n":3,"edges":[[1,2,3]]})"); }) ==
          ErrorKind::MalformedInput);
}

TEST_CASE("graph_to_json round-trips") {
    for (const auto &g : {triangle(), square(), path3(), complete(5)}) {
        CHECK(parse_graph(graph_to_json(g).dump()) == g);
    }
}

TEST_CASE("non_edges") {
    CHECK(non_edges(triangle()).empty());
    CHECK(non_edges(square()) == std::set<Edge>{{1, 3}, {2, 4}});
    CHECK(non_edges(complete(4)).empty());
    CHECK(non_edges(path3()) == std::set<Edge>{{1, 3}});
}

TEST_CASE("qubit_index examples") {
    CHECK(qubit_index(2, 2, 3) == 1);
    CHECK(qubit_index(3, 3, 3) == 4);
    CHECK(qubit_index(4, 4, 4) == 9);
    CHECK(kind_of([] { qubit_index(1, 2, 3); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { qubit_index(2, 1, 3); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { qubit_index(2, 4, 3); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { variable_of_qubit(0, 3); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { variable_of_qubit(5, 3); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("qubit_index is a bijection onto 1..(n-1)^2") {
    for (int n = 3; n <= 6; ++n) {
        std::set<std::size_t> seen;
        for (int v = 2; v <= n; ++v) {
            for (int j = 2; j <= n; ++j) {
                const auto q = qubit_index(v, j, n);
                CHECK(q >= 1);
                CHECK(q <= static_cast<std::size_t>((n - 1) * (n - 1)));
                seen.insert(q);
                const auto back = variable_of_qubit(q, n);
                CHECK(back.vertex == v);
                CHECK(back.position == j);
            }
        }
        CHECK(seen.size() == static_cast<std::size_t>((n - 1) * (n - 1)));
    }
}

TEST_CASE("Assignment validation and index conversion") {
    const Assignment a("1001");
    CHECK(a.size() == 4);
    CHECK(a.qubit(1));
    CHECK_FALSE(a.qubit(2));
    CHECK(a.to_index() == 0b1001);
    CHECK(Assignment::from_index(1, 4).str() == "1000");
    CHECK(bitstring(2, 3) == "010");
    for (std::uint64_t i = 0; i < 512; ++i) {
        CHECK(Assignment::from_index(i, 9).to_index() == i);
    }
    CHECK(kind_of([] { Assignment("10a1"); }) == ErrorKind::MalformedInput);
}

TEST_CASE("decode examples on the triangle") {
    const auto g = triangle();
    const auto a = decode(Assignment("1001"), g);
    REQUIRE(a.valid());
    CHECK(a.order == std::vector<int>{1, 2, 3});
    const auto b = decode(Assignment("0110"), g);
    REQUIRE(b.valid());
    CHECK(b.order == std::vector<int>{1, 3, 2});
    const auto c = decode(Assignment("0000"), g);
    REQUIRE_FALSE(c.valid());
    CHECK(c.violation->constraint == ConstraintClass::PositionUniqueness);
    CHECK(c.violation->indices.front() == 2);
    CHECK(kind_of([&] { decode(Assignment("100"), g); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("decode reports vertex and edge violations") {
    // x[2,2] = x[2,3] = 1 fills both positions with vertex 2.
    const auto v = decode(Assignment("1100"), triangle());
    REQUIRE_FALSE(v.valid());
    CHECK(v.violation->constraint == ConstraintClass::VertexUniqueness);
    const auto e = decode(Assignment("1001"), path3());
    REQUIRE_FALSE(e.valid());
    CHECK(e.violation->constraint == ConstraintClass::EdgeValidity);
    CHECK(e.violation->indices == std::vector<int>{3, 1});
}

TEST_CASE("decode(encode(tour)) round-trips") {
    for (int n = 3; n <= 5; ++n) {
        const auto g = complete(n);
        std::vector<int> rest(static_cast<std::size_t>(n - 1));
        std::iota(rest.begin(), rest.end(), 2);
        std::size_t count = 0;
        do {
            std::vector<int> order{1};
            order.insert(order.end(), rest.begin(), rest.end());
            const auto d = decode(encode(order), g);
            REQUIRE(d.valid());
            CHECK(d.order == order);
            ++count;
        } while (std::next_permutation(rest.begin(), rest.end()));
        CHECK(count == static_cast<std::size_t>(std::tgamma(n)));
    }
}

TEST_CASE("decode is valid exactly where the QUBO oracle vanishes") {
    std::vector<Graph> graphs = all_graphs(3);
    const auto four = all_graphs(4);
    graphs.insert(graphs.end(), four.begin(), four.end());
    for (const auto &g : graphs) {
        const auto q = g.num_qubits();
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << q); ++i) {
            const auto a = Assignment::from_index(i, q);
            const bool zero = qubo_oracle(g, Rational{1}, a) == Rational{0};
            REQUIRE(decode(a, g).valid() == zero);
        }
    }
}
