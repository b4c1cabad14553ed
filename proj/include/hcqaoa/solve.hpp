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

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "engine.hpp"
#include "error.hpp"
#include "hamiltonian.hpp"
#include "optimizer.hpp"

namespace hcqaoa {

/// Noiseless QAOA state without a gate list: the cost layer is the diagonal
/// phase exp(-i gamma (H - c)), the mixer a product of RX/RY(2 beta). Agrees
/// with simulate(bind(build_ansatz(...))) amplitude for amplitude.
class QaoaEvaluator {
  public:
    QaoaEvaluator(const DiagonalHamiltonian &h, std::size_t layers, MixerKind mixer,
                  std::size_t qubit_cap = kDefaultSimulatorQubitCap)
        : h_(h), layers_(layers), mixer_(mixer) {
        if (h.num_qubits() == 0) {
            fail(ErrorKind::EmptyModel, "cost model has no qubits");
        }
        if (h.num_qubits() > qubit_cap) {
            fail(ErrorKind::TooManyQubits,
                 std::to_string(h.num_qubits()) + " qubits exceeds simulator cap");
        }
        energies_ = diagonal(h);
        phases_.resize(energies_.size());
        for (std::size_t i = 0; i < energies_.size(); ++i) {
            phases_[i] = energies_[i] - h.constant();
        }
    }

    [[nodiscard]] std::size_t num_parameters() const noexcept { return 2 * layers_; }
    [[nodiscard]] const std::vector<double> &energies() const noexcept { return energies_; }

    [[nodiscard]] Statevector<double> state(std::span<const double> params) const {
        if (params.size() != num_parameters()) {
            fail(ErrorKind::ArityMismatch, "expected " + std::to_string(num_parameters()) +
                                               " parameters");
        }
        const std::size_t q = h_.num_qubits();
        const double amp = 1.0 / std::sqrt(static_cast<double>(energies_.size()));
        Statevector<double> s(q, std::vector<std::complex<double>>(energies_.size(), amp));
        auto &a = s.amplitudes();
        for (std::size_t l = 0; l < layers_; ++l) {
            const double gamma = params[l];
            const double beta = params[layers_ + l];
            for (std::size_t i = 0; i < a.size(); ++i) {
                const double angle = -gamma * phases_[i];
                const double c = std::cos(angle);
                const double sn = std::sin(angle);
                a[i] = {a[i].real() * c - a[i].imag() * sn, a[i].real() * sn + a[i].imag() * c};
            }
            for (std::size_t k = 1; k <= q; ++k) {
                if (mixer_ == MixerKind::RX) {
                    s.apply_rx(k, 2.0 * beta);
                } else {
                    s.apply_ry(k, 2.0 * beta);
                }
            }
        }
        return s;
    }

    [[nodiscard]] double expectation(std::span<const double> params) const {
        const auto s = state(params);
        double total = 0.0;
        for (std::size_t i = 0; i < energies_.size(); ++i) {
            total += std::norm(s.amplitudes()[i]) * energies_[i];
        }
        return total;
    }

  private:
    DiagonalHamiltonian h_;
    std::size_t layers_;
    MixerKind mixer_;
    std::vector<double> energies_;
    std::vector<double> phases_;
};

struct SolveConfig {
    std::size_t layers = 2;
    MixerKind mixer = MixerKind::RX;
    std::optional<NoiseModel> noise;
    OptimizerConfig optimizer{};
    std::uint64_t shots = kDefaultShots;
    /// Optimise the shot-sampled mean energy (through the noise model when one
    /// is set) instead of the exact noiseless expectation.
    bool sampled_objective = false;
    /// Shots per objective evaluation in sampled or noisy mode.
    std::uint64_t objective_shots = 1000;
    std::size_t qubit_cap = kDefaultSimulatorQubitCap;
};

struct SolveReport {
    OptimizationResult optimization;
    std::vector<double> gamma;
    std::vector<double> beta;
    Distribution final_distribution;
    double ground_state_mass = 0.0;
    /// Exact expectation when noiseless, sampled mean energy when noisy.
    double expectation_final = 0.0;
    double exact_expectation = 0.0;
    double sampled_energy = 0.0;
    double ground_energy = 0.0;
    std::vector<std::string> ground_states;
};

namespace detail {
inline std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t salt) {
    return splitmix64(seed ^ splitmix64(salt));
}
inline constexpr std::uint64_t kInitSalt = 1;
inline constexpr std::uint64_t kObjectiveSalt = 2;
inline constexpr std::uint64_t kFinalSalt = 3;
} // namespace detail

inline double ground_state_mass(const Distribution &d,
                                const std::vector<std::string> &ground) {
    double mass = 0.0;
    for (const auto &s : ground) {
        mass += d.probability(s);
    }
    return mass;
}

/// Full variational loop: random start in [0, 2pi)^2p, Nelder-Mead on the
/// objective, then a final sample at the best parameters. With a noise model
/// the final sample runs through the trajectory simulator; the objective only
/// sees noise when sampled_objective is set.
inline SolveReport qaoa_solve(const DiagonalHamiltonian &h, const SolveConfig &cfg) {
    if (cfg.shots == 0 || cfg.objective_shots == 0) {
        fail(ErrorKind::InvalidArgument, "shots must be >= 1");
    }
    if (cfg.noise) {
        cfg.noise->validate();
    }
    const auto spectrum = full_spectrum(h);
    const auto circuit = build_ansatz(h, cfg.layers, cfg.mixer);
    const QaoaEvaluator evaluator(h, cfg.layers, cfg.mixer, cfg.qubit_cap);
    const std::uint64_t seed = cfg.optimizer.seed;
    const auto objective_seed = detail::derived_seed(seed, detail::kObjectiveSalt);
    const bool noisy = cfg.noise.has_value() && !cfg.noise->is_noiseless();

    auto mean_energy = [&](const std::vector<std::uint64_t> &counts) {
        double total = 0.0;
        std::uint64_t shots = 0;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            total += static_cast<double>(counts[i]) * evaluator.energies()[i];
            shots += counts[i];
        }
        return total / static_cast<double>(shots);
    };
    auto objective = [&](std::span<const double> params) {
        if (!cfg.sampled_objective) {
            return evaluator.expectation(params);
        }
        if (cfg.noise) {
            return mean_energy(simulate_noisy_dense(bind_parameters(circuit, params),
                                                    *cfg.noise, cfg.objective_shots,
                                                    objective_seed, cfg.qubit_cap));
        }
        return mean_energy(
            sample_dense(evaluator.state(params), cfg.objective_shots, objective_seed));
    };

    SolveReport report;
    const std::size_t d = 2 * cfg.layers;
    if (d == 0) {
        report.optimization.best_value = objective({});
        report.optimization.trace.push_back({0, report.optimization.best_value});
        report.optimization.evals_used = 1;
        report.optimization.converged = true;
    } else {
        auto opt = cfg.optimizer;
        if (!opt.bounds) {
            opt.bounds = Box::uniform(d, 0.0, 2.0 * std::numbers::pi);
        }
        std::mt19937_64 rng(detail::derived_seed(seed, detail::kInitSalt));
        std::vector<double> x0(d);
        for (auto &x : x0) {
            x = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
        }
        report.optimization = minimize(objective, x0, opt);
    }
    const auto &best = report.optimization.best_params;
    report.gamma.assign(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(cfg.layers));
    report.beta.assign(best.begin() + static_cast<std::ptrdiff_t>(cfg.layers), best.end());

    const auto bound = bind_parameters(circuit, best);
    const auto state = simulate(bound, cfg.qubit_cap);
    const auto final_seed = detail::derived_seed(seed, detail::kFinalSalt);
    report.final_distribution = cfg.noise
                                    ? simulate_noisy(bound, *cfg.noise, cfg.shots,
                                                     final_seed, cfg.qubit_cap)
                                    : sample(state, cfg.shots, final_seed);
    report.exact_expectation = expectation(state, h);
    report.sampled_energy = report.final_distribution.mean_energy(h);
    report.expectation_final = noisy ? report.sampled_energy : report.exact_expectation;
    report.ground_energy = spectrum.ground_energy;
    report.ground_states = spectrum.ground_states;
    report.ground_state_mass =
        ground_state_mass(report.final_distribution, spectrum.ground_states);
    return report;
}

} // namespace hcqaoa
