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

#include <array>
#include <bit>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "hamiltonian.hpp"
#include "ising.hpp"

namespace hcqaoa {

enum class GateKind { H, RX, RY, RZ, CNOT };
enum class MixerKind { RX, RY };

inline constexpr std::string_view to_string(GateKind k) {
    switch (k) {
    case GateKind::H:
        return "H";
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    case GateKind::CNOT:
        return "CNOT";
    }
    return "?";
}

inline constexpr std::string_view to_string(MixerKind k) {
    return k == MixerKind::RX ? "rx" : "ry";
}

inline MixerKind parse_mixer(std::string_view s) {
    if (s == "rx" || s == "RX") {
        return MixerKind::RX;
    }
    if (s == "ry" || s == "RY") {
        return MixerKind::RY;
    }
    fail(ErrorKind::InvalidArgument, "unknown mixer '" + std::string(s) + "'");
}

/// Reference to gamma_l or beta_l (layer is 1-based).
struct ParamRef {
    enum class Family { Gamma, Beta } family;
    std::size_t layer;
    friend bool operator==(const ParamRef &, const ParamRef &) = default;
};

/// Rotation angle: either a literal or scale * parameter.
struct Angle {
    double value = 0.0;
    std::optional<ParamRef> param;
    double scale = 1.0;

    static Angle literal(double v) { return {v, std::nullopt, 1.0}; }
    static Angle symbolic(ParamRef p, double s) { return {0.0, p, s}; }
    [[nodiscard]] bool is_bound() const noexcept { return !param.has_value(); }
    friend bool operator==(const Angle &, const Angle &) = default;
};

/// Rotations follow R(theta) = exp(-i theta P / 2). Qubits are 1-based;
/// for CNOT qubits[0] is the control.
struct Gate {
    GateKind kind;
    std::array<std::size_t, 2> qubits{0, 0};
    Angle angle{};

    [[nodiscard]] bool two_qubit() const noexcept { return kind == GateKind::CNOT; }
    friend bool operator==(const Gate &, const Gate &) = default;

    static Gate h(std::size_t q) { return {GateKind::H, {q, 0}, {}}; }
    static Gate rx(std::size_t q, Angle a) { return {GateKind::RX, {q, 0}, a}; }
    static Gate ry(std::size_t q, Angle a) { return {GateKind::RY, {q, 0}, a}; }
    static Gate rz(std::size_t q, Angle a) { return {GateKind::RZ, {q, 0}, a}; }
    static Gate cnot(std::size_t control, std::size_t target) {
        if (control == target) {
            fail(ErrorKind::InvalidArgument, "CNOT control equals target");
        }
        return {GateKind::CNOT, {control, target}, {}};
    }
};

struct ParamCircuit {
    std::size_t num_qubits = 0;
    std::vector<Gate> gates;
    std::size_t layers = 0;
    MixerKind mixer = MixerKind::RX;

    [[nodiscard]] std::size_t num_parameters() const noexcept { return 2 * layers; }

    [[nodiscard]] bool is_bound() const noexcept {
        for (const auto &g : gates) {
            if (!g.angle.is_bound()) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] std::size_t count(GateKind k) const noexcept {
        std::size_t c = 0;
        for (const auto &g : gates) {
            c += g.kind == k ? 1 : 0;
        }
        return c;
    }
};

/// Hadamard row, then p x (cost block, mixer block). The cost block applies
/// RZ(2 w gamma) per linear term and CNOT-RZ(2 w gamma)-CNOT per ZZ term,
/// which is exp(-i gamma H) up to the dropped constant's global phase.
inline ParamCircuit build_ansatz(const DiagonalHamiltonian &h, std::size_t p,
                                 MixerKind mixer) {
    if (h.num_qubits() == 0) {
        fail(ErrorKind::EmptyModel, "cost model has no qubits");
    }
    ParamCircuit c;
    c.num_qubits = h.num_qubits();
    c.layers = p;
    c.mixer = mixer;
    for (std::size_t q = 1; q <= c.num_qubits; ++q) {
        c.gates.push_back(Gate::h(q));
    }
    for (std::size_t l = 1; l <= p; ++l) {
        const ParamRef gamma{ParamRef::Family::Gamma, l};
        const ParamRef beta{ParamRef::Family::Beta, l};
        for (const auto &t : h.terms()) {
            const auto qs = DiagonalHamiltonian::qubits_of(t.mask);
            const auto angle = Angle::symbolic(gamma, 2.0 * t.coeff);
            if (qs.size() == 1) {
                c.gates.push_back(Gate::rz(qs[0], angle));
            } else if (qs.size() == 2) {
                c.gates.push_back(Gate::cnot(qs[0], qs[1]));
                c.gates.push_back(Gate::rz(qs[1], angle));
                c.gates.push_back(Gate::cnot(qs[0], qs[1]));
            } else {
                fail(ErrorKind::InvalidArgument,
                     "cost terms must act on one or two qubits");
            }
        }
        for (std::size_t q = 1; q <= c.num_qubits; ++q) {
            const auto angle = Angle::symbolic(beta, 2.0);
            c.gates.push_back(mixer == MixerKind::RX ? Gate::rx(q, angle)
                                                     : Gate::ry(q, angle));
        }
    }
    return c;
}

inline ParamCircuit build_ansatz(const IsingModel &m, std::size_t p,
                                 MixerKind mixer) {
    return build_ansatz(DiagonalHamiltonian(m), p, mixer);
}

/// Replaces every symbolic angle; gamma and beta each hold p values.
inline ParamCircuit bind_parameters(const ParamCircuit &c, std::span<const double> gamma,
                         std::span<const double> beta) {
    if (gamma.size() != c.layers || beta.size() != c.layers) {
        fail(ErrorKind::ArityMismatch,
             "expected " + std::to_string(c.layers) + " gammas and betas, got " +
                 std::to_string(gamma.size()) + " and " +
                 std::to_string(beta.size()));
    }
    ParamCircuit out = c;
    for (auto &g : out.gates) {
        if (g.angle.param) {
            const auto &ref = *g.angle.param;
            const double v = ref.family == ParamRef::Family::Gamma
                                 ? gamma[ref.layer - 1]
                                 : beta[ref.layer - 1];
            g.angle = Angle::literal(g.angle.scale * v);
        }
    }
    return out;
}

/// Flat parameter vector layout: [gamma_1..gamma_p, beta_1..beta_p].
inline ParamCircuit bind_parameters(const ParamCircuit &c, std::span<const double> params) {
    if (params.size() != c.num_parameters()) {
        fail(ErrorKind::ArityMismatch,
             "expected " + std::to_string(c.num_parameters()) +
                 " parameters, got " + std::to_string(params.size()));
    }
    return bind_parameters(c, params.first(c.layers), params.subspan(c.layers));
}

/// One gate per line: "H 1", "CNOT 1 2", "RZ 2 0.600000", "RX 3 2*b1".
inline std::string dump(const ParamCircuit &c) {
    std::string out;
    char buf[64];
    for (const auto &g : c.gates) {
        out += to_string(g.kind);
        out += ' ' + std::to_string(g.qubits[0]);
        if (g.two_qubit()) {
            out += ' ' + std::to_string(g.qubits[1]);
        } else if (g.kind != GateKind::H) {
            if (g.angle.param) {
                const char family =
                    g.angle.param->family == ParamRef::Family::Gamma ? 'g' : 'b';
                std::snprintf(buf, sizeof buf, " %g*%c%zu", g.angle.scale,
                              family, g.angle.param->layer);
            } else {
                std::snprintf(buf, sizeof buf, " %.6f", g.angle.value);
            }
            out += buf;
        }
        out += '\n';
    }
    return out;
}

} // namespace hcqaoa
