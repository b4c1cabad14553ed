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

#include <hcqaoa/ising.hpp>

#include "support.hpp"

using namespace hcqaoa;
using namespace hcqaoa::testing;

namespace {

std::set<std::pair<std::string, Rational>> as_set(const PauliTermList &terms) {
    std::set<std::pair<std::string, Rational>> out;
    for (const auto &t : terms) {
        out.emplace(t.pauli, t.coeff);
    }
    return out;
}

std::vector<Graph> small_graphs() {
    auto graphs = all_graphs(3);
    const auto four = all_graphs(4);
    graphs.insert(graphs.end(), four.begin(), four.end());
    return graphs;
}

} // namespace

TEST_CASE("triangle compiles to four half-weight ZZ terms") {
    const auto m = compile(triangle());
    CHECK(m.num_qubits == 4);
    CHECK(m.constant == 2);
    CHECK(m.linear.empty());
    const Rational half(1, 2);
    CHECK(m.quadratic == std::map<QubitPair, Rational>{
                             {{1, 2}, half}, {{3, 4}, half}, {{1, 3}, half}, {{2, 4}, half}});
}

TEST_CASE("to_ising edge cases") {
    const auto empty = to_ising(QuboPolynomial{}, 3);
    CHECK(empty.linear.empty());
    CHECK(empty.quadratic.empty());
    CHECK(empty.constant == 0);

    QuboPolynomial single;
    single.add_linear({2, 2}, 1);
    const auto m = to_ising(single, 3);
    CHECK(m.constant == Rational(1, 2));
    CHECK(m.linear == std::map<std::size_t, Rational>{{1, Rational(-1, 2)}});
    CHECK(m.quadratic.empty());

    QuboPolynomial outside;
    outside.add_linear({4, 2}, 1);
    CHECK_THROWS_AS(to_ising(outside, 3), Error);
}

TEST_CASE("strip_constant") {
    const auto tri = strip_constant(compile(triangle()), Rational{2});
    CHECK(tri.constant == 0);
    for (const auto &[jk, c] : tri.quadratic) {
        CHECK(c == 1);
    }
    CHECK(tri == normalized(compile(triangle())));

    const IsingModel empty{4, 0, {}, {}};
    CHECK(strip_constant(empty) == empty);

    const auto sq = compile(square());
    const auto same = strip_constant(sq, Rational{1});
    CHECK(same.constant == 0);
    CHECK(same.linear == sq.linear);
    CHECK(same.quadratic == sq.quadratic);

    CHECK_THROWS_AS(strip_constant(sq, Rational{0}), Error);
    CHECK_THROWS_AS(strip_constant(sq, Rational{-2}), Error);
}

TEST_CASE("normalized models have coprime integer coefficients") {
    for (const auto &g : {triangle(), square(), path3(), complete(4)}) {
        const auto m = normalized(compile(g));
        CHECK(m.constant == 0);
        std::int64_t gcd = 0;
        for (const auto &[k, c] : m.linear) {
            CHECK(c.denominator() == 1);
            gcd = std::gcd(gcd, c.numerator());
        }
        for (const auto &[jk, c] : m.quadratic) {
            CHECK(c.denominator() == 1);
            gcd = std::gcd(gcd, c.numerator());
        }
        CHECK(gcd == 1);
    }
}

TEST_CASE("Ising energy equals the QUBO value on every assignment") {
    for (const auto &g : small_graphs()) {
        for (const Rational a : {Rational{1}, Rational(3, 2)}) {
            const auto q = assemble(g, a);
            const auto m = to_ising(q, g.order());
            const auto nq = g.num_qubits();
            for (std::uint64_t i = 0; i < (std::uint64_t{1} << nq); ++i) {
                const auto bits = Assignment::from_index(i, nq);
                REQUIRE(m.energy(bits) == q.evaluate(bits, g.order()));
            }
        }
    }
}

TEST_CASE("strip_constant preserves argmin and energy ordering") {
    for (const auto &g : small_graphs()) {
        const auto raw = compile(g);
        const auto norm = normalized(raw);
        const auto nq = g.num_qubits();
        std::vector<std::pair<Rational, Rational>> e;
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << nq); ++i) {
            const auto bits = Assignment::from_index(i, nq);
            e.emplace_back(raw.energy(bits), norm.energy(bits));
        }
        std::sort(e.begin(), e.end());
        for (std::size_t i = 1; i < e.size(); ++i) {
            REQUIRE((e[i - 1].first < e[i].first) == (e[i - 1].second < e[i].second));
            REQUIRE((e[i - 1].first == e[i].first) == (e[i - 1].second == e[i].second));
        }
    }
}

TEST_CASE("relabeling vertices other than 1 permutes qubits") {
    std::mt19937_64 rng(11);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto g = random_graph(4, seed);
        std::vector<int> perm{2, 3, 4};
        std::shuffle(perm.begin(), perm.end(), rng);
        auto pi = [&](int v) { return v == 1 ? 1 : perm[static_cast<std::size_t>(v - 2)]; };
        std::vector<Edge> relabeled;
        for (const auto &[u, v] : g.edges()) {
            relabeled.emplace_back(pi(u), pi(v));
        }
        const Graph h(4, relabeled);
        const auto mg = compile(g);
        const auto mh = compile(h);
        for (std::uint64_t i = 0; i < 512; ++i) {
            const auto a = Assignment::from_index(i, 9);
            std::string b(9, '0');
            for (int v = 2; v <= 4; ++v) {
                for (int j = 2; j <= 4; ++j) {
                    b[qubit_index(pi(v), j, 4) - 1] = a.qubit(qubit_index(v, j, 4)) ? '1' : '0';
                }
            }
            REQUIRE(mg.energy(a) == mh.energy(Assignment(b)));
        }
    }
}

TEST_CASE("maxcut energies are minus the cut weight") {
    const auto one = maxcut_ising(2, {{{1, 2}, Rational{1}}});
    CHECK(one.energy(Assignment("01")) == -1);
    CHECK(one.energy(Assignment("10")) == -1);
    CHECK(one.energy(Assignment("00")) == 0);
    CHECK(one.energy(Assignment("11")) == 0);

    const auto scaled = maxcut_ising(2, {{{2, 1}, Rational(5, 2)}});
    for (const char *s : {"00", "01", "10", "11"}) {
        CHECK(scaled.energy(Assignment(s)) == one.energy(Assignment(s)) * Rational(5, 2));
    }

    const auto g = square();
    std::map<Edge, Rational> w{{{1, 2}, 1}, {{2, 3}, 2}, {{3, 4}, 3}, {{4, 1}, 4}};
    const auto m = maxcut_ising(g, w);
    CHECK(m.energy(Assignment("1010")) == -10);
    CHECK(m.energy(Assignment("1100")) == -6);

    w.erase({1, 2});
    try {
        maxcut_ising(g, w);
        FAIL("expected WeightMissing");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::WeightMissing);
    }
    CHECK_THROWS_AS(maxcut_ising(g, {{{1, 3}, 1}}), Error);
}

TEST_CASE("to_term_list") {
    const auto tri = normalized(compile(triangle()));
    CHECK(as_set(to_term_list(tri)) ==
          std::set<std::pair<std::string, Rational>>{
              {"ZZII", 1}, {"IIZZ", 1}, {"ZIZI", 1}, {"IZIZ", 1}});
    CHECK(to_term_list(IsingModel{3, 0, {}, {}}).empty());

    const auto raw = compile(triangle());
    const auto kept = to_term_list(raw, true);
    REQUIRE(kept.size() == 5);
    CHECK(kept.front() == PauliTerm{"IIII", 2});
    CHECK(to_term_list(raw, false).size() == 4);

    const auto sq = to_term_list(strip_constant(compile(square())));
    CHECK(sq.size() == 31);
    const auto linear = std::count_if(sq.begin(), sq.end(), [](const PauliTerm &t) {
        return std::count(t.pauli.begin(), t.pauli.end(), 'Z') == 1;
    });
    CHECK(linear == 9);
    // Deterministic order: linear terms by qubit first.
    CHECK(sq.front().pauli == "ZIIIIIIII");
}

TEST_CASE("square term support matches the reference listing") {
    const auto doc = nlohmann::json::parse(read_file(data_path("paper_square.json")));
    std::set<std::string> reference;
    for (const auto &t : doc["terms"]) {
        reference.insert(t["pauli"].get<std::string>());
    }
    std::set<std::string> ours;
    for (const auto &t : to_term_list(compile(square()))) {
        ours.insert(t.pauli);
    }
    CHECK(reference.size() == 31);
    CHECK(ours == reference);
}
