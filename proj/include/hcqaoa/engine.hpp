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
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "circuit.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "hamiltonian.hpp"

namespace hcqaoa {

inline constexpr std::size_t kDefaultSimulatorQubitCap = 24;
inline constexpr std::uint64_t kDefaultShots = 10000;

/// Dense state over 2^q amplitudes; bit k of the index is qubit k+1.
template <std::floating_point T = double> class Statevector {
  public:
    using complex_type = std::complex<T>;

    explicit Statevector(std::size_t num_qubits)
        : num_qubits_(num_qubits),
          amplitudes_(std::size_t{1} << num_qubits, complex_type{0}) {
        amplitudes_[0] = 1;
    }

    Statevector(std::size_t num_qubits, std::vector<complex_type> amplitudes)
        : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
        if (amplitudes_.size() != (std::size_t{1} << num_qubits)) {
            fail(ErrorKind::DimensionMismatch, "amplitude count is not 2^q");
        }
    }

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] const std::vector<complex_type> &amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] std::vector<complex_type> &amplitudes() noexcept { return amplitudes_; }

    [[nodiscard]] T norm_squared() const noexcept {
        T s = 0;
        for (const auto &a : amplitudes_) {
            s += std::norm(a);
        }
        return s;
    }

    [[nodiscard]] std::vector<T> probabilities() const {
        std::vector<T> p(amplitudes_.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            p[i] = std::norm(amplitudes_[i]);
        }
        return p;
    }

    /// Applies [[m00, m01], [m10, m11]] to a 1-based qubit.
    void apply_matrix(std::size_t qubit, complex_type m00, complex_type m01,
                      complex_type m10, complex_type m11) {
        const std::size_t bit = stride(qubit);
        const std::size_t dim = amplitudes_.size();
        for (std::size_t base = 0; base < dim; base += 2 * bit) {
            for (std::size_t i = base; i < base + bit; ++i) {
                const auto a0 = amplitudes_[i];
                const auto a1 = amplitudes_[i | bit];
                amplitudes_[i] = mul(m00, a0) + mul(m01, a1);
                amplitudes_[i | bit] = mul(m10, a0) + mul(m11, a1);
            }
        }
    }

    void apply_h(std::size_t qubit) {
        const T r = T{1} / std::sqrt(T{2});
        apply_matrix(qubit, r, r, r, -r);
    }

    void apply_rx(std::size_t qubit, T theta) {
        const T c = std::cos(theta / 2);
        const T s = std::sin(theta / 2);
        apply_matrix(qubit, c, {0, -s}, {0, -s}, c);
    }

    void apply_ry(std::size_t qubit, T theta) {
        const T c = std::cos(theta / 2);
        const T s = std::sin(theta / 2);
        apply_matrix(qubit, c, -s, s, c);
    }

    void apply_rz(std::size_t qubit, T theta) {
        apply_diagonal(qubit, std::polar(T{1}, -theta / 2), std::polar(T{1}, theta / 2));
    }

    void apply_diagonal(std::size_t qubit, complex_type d0, complex_type d1) {
        const std::size_t bit = stride(qubit);
        const std::size_t dim = amplitudes_.size();
        for (std::size_t base = 0; base < dim; base += 2 * bit) {
            for (std::size_t i = base; i < base + bit; ++i) {
                amplitudes_[i] = mul(d0, amplitudes_[i]);
                amplitudes_[i | bit] = mul(d1, amplitudes_[i | bit]);
            }
        }
    }

    void apply_x(std::size_t qubit) {
        const std::size_t bit = stride(qubit);
        const std::size_t dim = amplitudes_.size();
        for (std::size_t base = 0; base < dim; base += 2 * bit) {
            for (std::size_t i = base; i < base + bit; ++i) {
                std::swap(amplitudes_[i], amplitudes_[i | bit]);
            }
        }
    }

    void apply_y(std::size_t qubit) {
        apply_matrix(qubit, 0, complex_type{0, -1}, complex_type{0, 1}, 0);
    }

    void apply_z(std::size_t qubit) { apply_diagonal(qubit, 1, -1); }

    void apply_cnot(std::size_t control, std::size_t target) {
        const std::size_t cbit = stride(control);
        const std::size_t tbit = stride(target);
        if (cbit == tbit) {
            fail(ErrorKind::InvalidArgument, "CNOT control equals target");
        }
        const std::size_t dim = amplitudes_.size();
        for (std::size_t base = 0; base < dim; base += 2 * tbit) {
            for (std::size_t i = base; i < base + tbit; ++i) {
                if (i & cbit) {
                    std::swap(amplitudes_[i], amplitudes_[i | tbit]);
                }
            }
        }
    }

    /// Pauli by code 0=I, 1=X, 2=Y, 3=Z.
    void apply_pauli(std::size_t qubit, int code) {
        switch (code) {
        case 1:
            apply_x(qubit);
            break;
        case 2:
            apply_y(qubit);
            break;
        case 3:
            apply_z(qubit);
            break;
        default:
            break;
        }
    }

    void apply(const Gate &g) {
        if (!g.angle.is_bound()) {
            fail(ErrorKind::UnboundParameter, "gate has a symbolic angle");
        }
        const auto theta = static_cast<T>(g.angle.value);
        switch (g.kind) {
        case GateKind::H:
            apply_h(g.qubits[0]);
            break;
        case GateKind::RX:
            apply_rx(g.qubits[0], theta);
            break;
        case GateKind::RY:
            apply_ry(g.qubits[0], theta);
            break;
        case GateKind::RZ:
            apply_rz(g.qubits[0], theta);
            break;
        case GateKind::CNOT:
            apply_cnot(g.qubits[0], g.qubits[1]);
            break;
        }
    }

  private:
    // Plain complex product; std::complex operator* checks for inf/nan.
    static complex_type mul(complex_type a, complex_type b) noexcept {
        return {a.real() * b.real() - a.imag() * b.imag(),
                a.real() * b.imag() + a.imag() * b.real()};
    }

    [[nodiscard]] std::size_t stride(std::size_t qubit) const {
        if (qubit < 1 || qubit > num_qubits_) {
            fail(ErrorKind::IndexOutOfRange,
                 "qubit " + std::to_string(qubit) + " outside 1.." +
                     std::to_string(num_qubits_));
        }
        return std::size_t{1} << (qubit - 1);
    }

    std::size_t num_qubits_;
    std::vector<complex_type> amplitudes_;
};

inline void check_simulable(const ParamCircuit &c, std::size_t qubit_cap) {
    if (c.num_qubits > qubit_cap) {
        fail(ErrorKind::TooManyQubits,
             std::to_string(c.num_qubits) + " qubits exceeds simulator cap " +
                 std::to_string(qubit_cap));
    }
    if (!c.is_bound()) {
        fail(ErrorKind::UnboundParameter, "circuit has unbound parameters");
    }
}

/// Runs a bound circuit on |0...0>.
inline Statevector<double> simulate(const ParamCircuit &c,
                                    std::size_t qubit_cap = kDefaultSimulatorQubitCap) {
    check_simulable(c, qubit_cap);
    Statevector<double> s(c.num_qubits);
    for (const auto &g : c.gates) {
        s.apply(g);
    }
    return s;
}

template <std::floating_point T>
double expectation(const Statevector<T> &s, const DiagonalHamiltonian &h) {
    if (s.num_qubits() != h.num_qubits()) {
        fail(ErrorKind::DimensionMismatch,
             "state has " + std::to_string(s.num_qubits()) +
                 " qubits, Hamiltonian " + std::to_string(h.num_qubits()));
    }
    double total = 0.0;
    const auto &amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        total += std::norm(amps[i]) * h.energy_at(i);
    }
    return total;
}

// Sampling -------------------------------------------------------------------

/// Measurement histogram keyed by bitstring.
struct Distribution {
    std::size_t num_qubits = 0;
    std::uint64_t shots = 0;
    std::map<std::string, std::uint64_t> counts;

    [[nodiscard]] double probability(const std::string &bits) const {
        const auto it = counts.find(bits);
        return it == counts.end() || shots == 0
                   ? 0.0
                   : static_cast<double>(it->second) / static_cast<double>(shots);
    }

    /// Outcomes by descending count, ties broken by bitstring.
    [[nodiscard]] std::vector<std::pair<std::string, std::uint64_t>> ranked() const {
        std::vector<std::pair<std::string, std::uint64_t>> out(counts.begin(),
                                                               counts.end());
        std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
            return a.second > b.second;
        });
        return out;
    }

    [[nodiscard]] double mean_energy(const DiagonalHamiltonian &h) const {
        double total = 0.0;
        for (const auto &[bits, n] : counts) {
            total += static_cast<double>(n) * energy_of(h, Assignment(bits));
        }
        return shots == 0 ? 0.0 : total / static_cast<double>(shots);
    }

    friend bool operator==(const Distribution &, const Distribution &) = default;
};

inline Distribution to_distribution(const std::vector<std::uint64_t> &dense,
                                    std::size_t num_qubits) {
    Distribution d;
    d.num_qubits = num_qubits;
    for (std::uint64_t i = 0; i < dense.size(); ++i) {
        if (dense[i] != 0) {
            d.counts.emplace(bitstring(i, num_qubits), dense[i]);
            d.shots += dense[i];
        }
    }
    return d;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent generator for shot `shot` under `seed`. The first draw of
/// every shot is its measurement variate.
inline std::mt19937_64 shot_stream(std::uint64_t seed, std::uint64_t shot) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(shot)));
}

inline double uniform01(std::mt19937_64 &rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline std::vector<double> cumulative(const std::vector<double> &p) {
    std::vector<double> cdf(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        cdf[i] = acc;
    }
    return cdf;
}

inline std::uint64_t draw(const std::vector<double> &cdf, double u) {
    const auto it =
        std::upper_bound(cdf.begin(), cdf.end(), u * cdf.back());
    return it == cdf.end() ? cdf.size() - 1
                           : static_cast<std::uint64_t>(it - cdf.begin());
}

} // namespace detail

/// Shot counts per basis index; shot t draws from its own stream of (seed, t).
template <std::floating_point T>
std::vector<std::uint64_t> sample_dense(const Statevector<T> &s,
                                        std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        fail(ErrorKind::InvalidArgument, "shots must be >= 1");
    }
    std::vector<double> p(s.dimension());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = std::norm(s.amplitudes()[i]);
    }
    const auto cdf = detail::cumulative(p);
    std::vector<std::uint64_t> counts(p.size(), 0);
    for (std::uint64_t t = 0; t < shots; ++t) {
        auto rng = detail::shot_stream(seed, t);
        ++counts[detail::draw(cdf, detail::uniform01(rng))];
    }
    return counts;
}

template <std::floating_point T>
Distribution sample(const Statevector<T> &s, std::uint64_t shots,
                    std::uint64_t seed) {
    return to_distribution(sample_dense(s, shots, seed), s.num_qubits());
}

// Noise ----------------------------------------------------------------------

/// Depolarizing probability after 1- and 2-qubit gates plus classical
/// per-bit readout flips.
struct NoiseModel {
    double p1 = 0.0;
    double p2 = 0.0;
    double readout = 0.0;

    void validate() const {
        for (const double p : {p1, p2, readout}) {
            if (!(p >= 0.0 && p <= 1.0)) {
                fail(ErrorKind::InvalidArgument,
                     "noise probabilities must lie in [0,1]");
            }
        }
    }

    [[nodiscard]] bool is_noiseless() const noexcept {
        return p1 == 0.0 && p2 == 0.0 && readout == 0.0;
    }

    friend bool operator==(const NoiseModel &, const NoiseModel &) = default;
};

/// Parses "p1=0.001,p2=0.01,ro=0.01"; omitted keys stay 0.
inline NoiseModel parse_noise(std::string_view spec) {
    NoiseModel nm;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        auto end = spec.find(',', pos);
        if (end == std::string_view::npos) {
            end = spec.size();
        }
        const auto item = spec.substr(pos, end - pos);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            fail(ErrorKind::MalformedInput, "noise item '" + std::string(item) +
                                                "' is not key=value");
        }
        const auto key = item.substr(0, eq);
        const std::string value(item.substr(eq + 1));
        double v = 0.0;
        try {
            std::size_t used = 0;
            v = std::stod(value, &used);
            if (used != value.size()) {
                throw std::invalid_argument(value);
            }
        } catch (const std::exception &) {
            fail(ErrorKind::MalformedInput, "bad noise value '" + value + "'");
        }
        if (key == "p1") {
            nm.p1 = v;
        } else if (key == "p2") {
            nm.p2 = v;
        } else if (key == "ro" || key == "readout") {
            nm.readout = v;
        } else {
            fail(ErrorKind::MalformedInput, "unknown noise key '" +
                                                std::string(key) + "'");
        }
        pos = end + 1;
    }
    nm.validate();
    return nm;
}

namespace detail {

struct PauliEvent {
    std::size_t gate;
    int first;  ///< Pauli code on qubits[0]
    int second; ///< Pauli code on qubits[1] (two-qubit gates only)
};

/// Noiseless states after each gate prefix, kept when they fit in the budget.
class PrefixCache {
  public:
    PrefixCache(const ParamCircuit &c, std::size_t budget_bytes) {
        const std::size_t dim = std::size_t{1} << c.num_qubits;
        const std::size_t bytes =
            (c.gates.size() + 1) * dim * sizeof(std::complex<double>);
        Statevector<double> s(c.num_qubits);
        if (bytes <= budget_bytes) {
            states_.reserve(c.gates.size() + 1);
            states_.push_back(s);
        }
        for (const auto &g : c.gates) {
            s.apply(g);
            if (!states_.empty()) {
                states_.push_back(s);
            }
        }
        final_ = s;
    }

    [[nodiscard]] const Statevector<double> &final_state() const { return *final_; }

    /// State after the first `count` gates, computing it if not cached.
    [[nodiscard]] Statevector<double> after(const ParamCircuit &c,
                                            std::size_t count) const {
        if (!states_.empty()) {
            return states_[count];
        }
        Statevector<double> s(c.num_qubits);
        for (std::size_t g = 0; g < count; ++g) {
            s.apply(c.gates[g]);
        }
        return s;
    }

  private:
    std::vector<Statevector<double>> states_;
    std::optional<Statevector<double>> final_;
};

} // namespace detail

/// Pauli-trajectory sampling: after every gate, with probability p1 (p2) a
/// uniformly random non-identity Pauli on the touched qubit(s); one
/// measurement per trajectory, then independent readout flips. Shot t owns
/// the stream of (seed, t) and consumes its measurement variate first, exactly
/// as sample() does, so a zero noise model reproduces sample(simulate(c)).
inline std::vector<std::uint64_t>
simulate_noisy_dense(const ParamCircuit &c, const NoiseModel &nm,
                     std::uint64_t shots, std::uint64_t seed,
                     std::size_t qubit_cap = kDefaultSimulatorQubitCap) {
    nm.validate();
    check_simulable(c, qubit_cap);
    if (shots == 0) {
        fail(ErrorKind::InvalidArgument, "shots must be >= 1");
    }
    const detail::PrefixCache cache(c, std::size_t{256} << 20);
    const auto cdf = detail::cumulative(cache.final_state().probabilities());
    std::vector<std::uint64_t> counts(cdf.size(), 0);
    std::vector<detail::PauliEvent> events;

    for (std::uint64_t t = 0; t < shots; ++t) {
        events.clear();
        auto rng = detail::shot_stream(seed, t);
        const double u = detail::uniform01(rng);
        if (nm.p1 > 0.0 || nm.p2 > 0.0) {
            for (std::size_t g = 0; g < c.gates.size(); ++g) {
                const bool two = c.gates[g].two_qubit();
                const double p = two ? nm.p2 : nm.p1;
                if (p > 0.0 && detail::uniform01(rng) < p) {
                    if (two) {
                        const int k = std::uniform_int_distribution<int>(1, 15)(rng);
                        events.push_back({g, k / 4, k % 4});
                    } else {
                        const int k = std::uniform_int_distribution<int>(1, 3)(rng);
                        events.push_back({g, k, 0});
                    }
                }
            }
        }
        std::uint64_t outcome = 0;
        if (events.empty()) {
            outcome = detail::draw(cdf, u);
        } else {
            auto s = cache.after(c, events.front().gate + 1);
            std::size_t next = 0;
            for (std::size_t g = events.front().gate; g < c.gates.size(); ++g) {
                if (g != events.front().gate) {
                    s.apply(c.gates[g]);
                }
                while (next < events.size() && events[next].gate == g) {
                    const auto &gate = c.gates[g];
                    s.apply_pauli(gate.qubits[0], events[next].first);
                    if (gate.two_qubit()) {
                        s.apply_pauli(gate.qubits[1], events[next].second);
                    }
                    ++next;
                }
            }
            outcome = detail::draw(detail::cumulative(s.probabilities()), u);
        }
        if (nm.readout > 0.0) {
            for (std::size_t k = 0; k < c.num_qubits; ++k) {
                if (detail::uniform01(rng) < nm.readout) {
                    outcome ^= std::uint64_t{1} << k;
                }
            }
        }
        ++counts[outcome];
    }
    return counts;
}

inline Distribution simulate_noisy(const ParamCircuit &c, const NoiseModel &nm,
                                   std::uint64_t shots, std::uint64_t seed,
                                   std::size_t qubit_cap = kDefaultSimulatorQubitCap) {
    return to_distribution(simulate_noisy_dense(c, nm, shots, seed, qubit_cap),
                           c.num_qubits);
}

} // namespace hcqaoa
