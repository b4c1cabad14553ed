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

#include <random>

#include <hcqaoa/ising.hpp>
#include <hcqaoa/solve.hpp>

#include "support.hpp"

using namespace hcqaoa;
using namespace hcqaoa::testing;

namespace {

DiagonalHamiltonian eq20() { return DiagonalHamiltonian(normalized(compile(triangle()))); }

SolveConfig triangle_config(std::uint64_t seed, MixerKind mixer = MixerKind::RX) {
    SolveConfig cfg;
    cfg.layers = 2;
    cfg.mixer = mixer;
    cfg.optimizer.max_evals = 2000;
    cfg.optimizer.restarts = 3;
    cfg.optimizer.xtol = 1e-4;
    cfg.optimizer.ftol = 1e-6;
    cfg.optimizer.initial_step = 0.3;
    cfg.optimizer.seed = seed;
    return cfg;
}

} // namespace

TEST_CASE("evaluator matches the gate-level circuit") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(0.0, 6.3);
    const std::vector<DiagonalHamiltonian> models{
        eq20(), DiagonalHamiltonian(compile(square())),
        DiagonalHamiltonian(normalized(compile(path3())))};
    for (const auto &h : models) {
        for (const auto mixer : {MixerKind::RX, MixerKind::RY}) {
            for (const std::size_t p : {1, 3}) {
                const QaoaEvaluator ev(h, p, mixer);
                const auto circuit = build_ansatz(h, p, mixer);
                std::vector<double> params(2 * p);
                for (auto &x : params) {
                    x = angle(rng);
                }
                const auto fast = ev.state(params);
                const auto slow = simulate(bind_parameters(circuit, params));
                double err = 0.0;
                for (std::size_t i = 0; i < fast.dimension(); ++i) {
                    err = std::max(err, std::abs(fast.amplitudes()[i] - slow.amplitudes()[i]));
                }
                CHECK(err < 1e-12);
                CHECK(ev.expectation(params) == Catch::Approx(expectation(slow, h)).margin(1e-10));
            }
        }
    }
    CHECK_THROWS_AS(QaoaEvaluator(eq20(), 2, MixerKind::RX).state(std::vector<double>{1.0}),
                    Error);
    CHECK_THROWS_AS(QaoaEvaluator(eq20(), 2, MixerKind::RX, 3), Error);
}

TEST_CASE("triangle solve finds both tours") {
    const auto r = qaoa_solve(eq20(), triangle_config(0));
    CHECK(r.expectation_final <= -2.0);
    const auto ranked = r.final_distribution.ranked();
    REQUIRE(ranked.size() >= 2);
    const std::set<std::string> top{ranked[0].first, ranked[1].first};
    CHECK(top == std::set<std::string>{"0110", "1001"});
    CHECK(r.ground_energy == -4.0);
    CHECK(r.ground_states == std::vector<std::string>{"0110", "1001"});
    CHECK(r.gamma.size() == 2);
    CHECK(r.beta.size() == 2);
    CHECK(r.final_distribution.shots == 10000);
}

TEST_CASE("objective never drops below the ground energy") {
    const auto r = qaoa_solve(eq20(), triangle_config(3, MixerKind::RY));
    for (const auto &t : r.optimization.trace) {
        CHECK(t.value >= -4.0 - 1e-9);
    }
}

TEST_CASE("solve is deterministic") {
    auto cfg = triangle_config(7);
    cfg.noise = NoiseModel{0.001, 0.01, 0.01};
    const auto a = qaoa_solve(eq20(), cfg);
    const auto b = qaoa_solve(eq20(), cfg);
    CHECK(a.optimization.best_params == b.optimization.best_params);
    CHECK(a.final_distribution == b.final_distribution);
    CHECK(a.expectation_final == b.expectation_final);
}

TEST_CASE("zero layers give the spectrum mean") {
    auto cfg = triangle_config(1);
    cfg.layers = 0;
    const auto r = qaoa_solve(eq20(), cfg);
    const auto d = diagonal(eq20());
    const double mean = std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(d.size());
    CHECK(r.exact_expectation == Catch::Approx(mean).margin(1e-12));
    CHECK(r.gamma.empty());
    CHECK(r.optimization.evals_used == 1);
    CHECK(r.final_distribution.counts.size() == 16);
    const auto p2 = qaoa_solve(eq20(), triangle_config(1));
    CHECK(p2.exact_expectation < r.exact_expectation);
}

TEST_CASE("a zero noise model leaves the final sample unchanged") {
    auto cfg = triangle_config(2);
    const auto clean = qaoa_solve(eq20(), cfg);
    cfg.noise = NoiseModel{};
    const auto zero = qaoa_solve(eq20(), cfg);
    CHECK(zero.final_distribution == clean.final_distribution);
    CHECK(zero.expectation_final == clean.expectation_final);
}

TEST_CASE("noise lowers the triangle ground-state mass") {
    auto cfg = triangle_config(4);
    const auto clean = qaoa_solve(eq20(), cfg);
    cfg.noise = NoiseModel{0.001, 0.01, 0.01};
    const auto noisy = qaoa_solve(eq20(), cfg);
    CHECK(noisy.ground_state_mass < clean.ground_state_mass);
    CHECK(noisy.expectation_final == noisy.sampled_energy);
}

TEST_CASE("sampled objective runs and stays deterministic") {
    auto cfg = triangle_config(5);
    cfg.sampled_objective = true;
    cfg.objective_shots = 200;
    cfg.optimizer.max_evals = 300;
    const auto a = qaoa_solve(eq20(), cfg);
    const auto b = qaoa_solve(eq20(), cfg);
    CHECK(a.optimization.best_value == b.optimization.best_value);
    CHECK(a.optimization.evals_used <= 300);
    cfg.noise = NoiseModel{0.001, 0.01, 0.0};
    cfg.optimizer.max_evals = 60;
    const auto c = qaoa_solve(eq20(), cfg);
    CHECK(c.optimization.evals_used <= 60);
}

TEST_CASE("ground_state_mass sums the listed states") {
    Distribution d;
    d.num_qubits = 2;
    d.shots = 10;
    d.counts = {{"00", 3}, {"01", 5}, {"11", 2}};
    CHECK(ground_state_mass(d, {"00", "11"}) == Catch::Approx(0.5));
    CHECK(ground_state_mass(d, {"10"}) == 0.0);
}

TEST_CASE("solve input errors") {
    auto cfg = triangle_config(0);
    cfg.shots = 0;
    CHECK_THROWS_AS(qaoa_solve(eq20(), cfg), Error);
    cfg = triangle_config(0);
    cfg.noise = NoiseModel{2.0, 0.0, 0.0};
    CHECK_THROWS_AS(qaoa_solve(eq20(), cfg), Error);
}
