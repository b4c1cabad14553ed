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
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "graph.hpp"
#include "ising.hpp"
#include "qubo.hpp"
#include "rational.hpp"

namespace hcqaoa {

inline constexpr std::size_t kDefaultSpectrumQubitCap = 20;

/// Diagonal operator constant + sum_t c_t prod_{k in mask_t} Z_k. Bit k of a
/// mask (and of a basis index) is qubit k+1.
class DiagonalHamiltonian {
  public:
    struct Term {
        std::uint64_t mask;
        double coeff;
    };

    DiagonalHamiltonian() = default;

    DiagonalHamiltonian(std::size_t num_qubits, std::vector<Term> terms,
                        double constant = 0.0)
        : num_qubits_(num_qubits), constant_(constant) {
        if (num_qubits > 63) {
            fail(ErrorKind::TooManyQubits, "at most 63 qubits supported");
        }
        std::map<std::uint64_t, double> merged;
        for (const auto &t : terms) {
            if (t.mask == 0) {
                constant_ += t.coeff;
                continue;
            }
            if (num_qubits < 64 && (t.mask >> num_qubits) != 0) {
                fail(ErrorKind::IndexOutOfRange, "term touches qubit beyond " +
                                                     std::to_string(num_qubits));
            }
            merged[t.mask] += t.coeff;
        }
        for (const auto &[mask, c] : merged) {
            if (c != 0.0) {
                terms_.push_back({mask, c});
            }
        }
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term &a, const Term &b) {
                      const auto pa = std::popcount(a.mask);
                      const auto pb = std::popcount(b.mask);
                      if (pa != pb) {
                          return pa < pb;
                      }
                      return qubits_of(a.mask) < qubits_of(b.mask);
                  });
    }

    explicit DiagonalHamiltonian(const IsingModel &m)
        : DiagonalHamiltonian(m.num_qubits, terms_of(m), to_double(m.constant)) {}

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] double constant() const noexcept { return constant_; }
    [[nodiscard]] const std::vector<Term> &terms() const noexcept { return terms_; }

    /// Energy of basis state `index`.
    [[nodiscard]] double energy_at(std::uint64_t index) const noexcept {
        double e = constant_;
        for (const auto &t : terms_) {
            e += (std::popcount(t.mask & index) & 1) ? -t.coeff : t.coeff;
        }
        return e;
    }

    /// Sum of |coefficients| plus |constant|; bounds every eigenvalue.
    [[nodiscard]] double norm_bound() const noexcept {
        double b = std::abs(constant_);
        for (const auto &t : terms_) {
            b += std::abs(t.coeff);
        }
        return b;
    }

    [[nodiscard]] DiagonalHamiltonian scaled(double s) const {
        auto copy = *this;
        copy.constant_ *= s;
        for (auto &t : copy.terms_) {
            t.coeff *= s;
        }
        return copy;
    }

    /// 1-based qubits in ascending order.
    static std::vector<std::size_t> qubits_of(std::uint64_t mask) {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < 64; ++k) {
            if ((mask >> k) & 1U) {
                out.push_back(k + 1);
            }
        }
        return out;
    }

  private:
    static std::vector<Term> terms_of(const IsingModel &m) {
        std::vector<Term> out;
        for (const auto &[k, c] : m.linear) {
            out.push_back({std::uint64_t{1} << (k - 1), to_double(c)});
        }
        for (const auto &[jk, c] : m.quadratic) {
            out.push_back({(std::uint64_t{1} << (jk.first - 1)) |
                               (std::uint64_t{1} << (jk.second - 1)),
                           to_double(c)});
        }
        return out;
    }

    std::size_t num_qubits_ = 0;
    double constant_ = 0.0;
    std::vector<Term> terms_;
};

inline double energy_of(const DiagonalHamiltonian &h, const Assignment &a) {
    if (a.size() != h.num_qubits()) {
        fail(ErrorKind::LengthMismatch,
             "assignment length " + std::to_string(a.size()) + " != " +
                 std::to_string(h.num_qubits()));
    }
    return h.energy_at(a.to_index());
}

/// All 2^q basis energies, indexed by basis index.
inline std::vector<double> diagonal(const DiagonalHamiltonian &h) {
    const std::uint64_t dim = std::uint64_t{1} << h.num_qubits();
    std::vector<double> out(dim, h.constant());
    for (const auto &t : h.terms()) {
        for (std::uint64_t x = 0; x < dim; ++x) {
            out[x] += (std::popcount(t.mask & x) & 1) ? -t.coeff : t.coeff;
        }
    }
    return out;
}

struct SpectrumLevel {
    double energy;
    std::vector<std::string> states; ///< sorted bitstrings
};

struct Spectrum {
    std::size_t num_qubits = 0;
    std::vector<SpectrumLevel> levels; ///< ascending energy
    double ground_energy = 0.0;
    std::vector<std::string> ground_states;
    double gap = 0.0; ///< 0 when only one level exists

    [[nodiscard]] std::size_t total_states() const noexcept {
        std::size_t n = 0;
        for (const auto &l : levels) {
            n += l.states.size();
        }
        return n;
    }
};

/// Exhaustive enumeration; energies within 1e-9 (relative) share a level.
inline Spectrum full_spectrum(const DiagonalHamiltonian &h,
                              std::size_t qubit_cap = kDefaultSpectrumQubitCap) {
    if (h.num_qubits() > qubit_cap) {
        fail(ErrorKind::TooManyQubits,
             std::to_string(h.num_qubits()) + " qubits exceeds spectrum cap " +
                 std::to_string(qubit_cap));
    }
    const auto energies = diagonal(h);
    std::vector<std::uint64_t> order(energies.size());
    for (std::uint64_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint64_t a, std::uint64_t b) {
                         return energies[a] < energies[b];
                     });
    Spectrum s;
    s.num_qubits = h.num_qubits();
    for (const auto idx : order) {
        const double e = energies[idx];
        if (s.levels.empty() ||
            std::abs(e - s.levels.back().energy) >
                1e-9 * std::max(1.0, std::abs(e))) {
            s.levels.push_back({e, {}});
        }
        s.levels.back().states.push_back(bitstring(idx, h.num_qubits()));
    }
    for (auto &l : s.levels) {
        std::sort(l.states.begin(), l.states.end());
    }
    s.ground_energy = s.levels.front().energy;
    s.ground_states = s.levels.front().states;
    s.gap = s.levels.size() > 1 ? s.levels[1].energy - s.ground_energy : 0.0;
    return s;
}

/// Literal evaluation of the penalty sums over the full n x n placement
/// matrix, with x[1,1] = 1 and the rest of row/column 1 fixed to 0. Shares no
/// code with the compiler.
inline Rational qubo_oracle(const Graph &g, const PenaltyWeights &w,
                            const Assignment &a) {
    const int n = g.order();
    if (a.size() != g.num_qubits()) {
        fail(ErrorKind::LengthMismatch, "assignment length mismatch");
    }
    std::vector<std::vector<int>> x(static_cast<std::size_t>(n + 1),
                                    std::vector<int>(static_cast<std::size_t>(n + 1), 0));
    x[1][1] = 1;
    std::size_t k = 0;
    for (int v = 2; v <= n; ++v) {
        for (int j = 2; j <= n; ++j) {
            x[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] =
                a.str()[k++] == '1' ? 1 : 0;
        }
    }
    auto at = [&](int v, int j) {
        return x[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)];
    };
    std::int64_t rows = 0;
    for (int v = 1; v <= n; ++v) {
        std::int64_t s = 1;
        for (int j = 1; j <= n; ++j) {
            s -= at(v, j);
        }
        rows += s * s;
    }
    std::int64_t cols = 0;
    for (int j = 1; j <= n; ++j) {
        std::int64_t s = 1;
        for (int v = 1; v <= n; ++v) {
            s -= at(v, j);
        }
        cols += s * s;
    }
    std::int64_t edges = 0;
    for (int u = 1; u <= n; ++u) {
        for (int v = 1; v <= n; ++v) {
            if (u == v || g.has_edge(u, v)) {
                continue;
            }
            for (int j = 1; j <= n - 1; ++j) {
                edges += at(u, j) * at(v, j + 1);
            }
            edges += at(u, n) * at(v, 1);
        }
    }
    return w.vertex * rows + w.position * cols + w.edge * edges;
}

inline Rational qubo_oracle(const Graph &g, const Rational &a_weight,
                            const Assignment &a) {
    return qubo_oracle(g, PenaltyWeights::uniform(a_weight), a);
}

// Term-list JSON ----------------------------------------------------------

inline nlohmann::json term_list_to_json(const IsingModel &m, bool keep_constant,
                                        bool constant_field) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &t : to_term_list(m, keep_constant)) {
        terms.push_back({{"pauli", t.pauli},
                         {"coeff", to_double(t.coeff)},
                         {"coeff_exact", to_string(t.coeff)}});
    }
    nlohmann::json doc = {{"num_qubits", m.num_qubits}};
    if (constant_field) {
        doc["constant"] = to_double(m.constant);
        doc["constant_exact"] = to_string(m.constant);
    }
    doc["terms"] = std::move(terms);
    return doc;
}

/// Accepts a bare array of {"pauli","coeff"} objects or ["ZZI", c] pairs, or
/// an object with "terms" and optional "num_qubits" / "constant".
inline DiagonalHamiltonian term_list_from_json(const nlohmann::json &doc) {
    const nlohmann::json *terms = &doc;
    double constant = 0.0;
    std::optional<std::size_t> num_qubits;
    if (doc.is_object()) {
        if (!doc.contains("terms") || !doc["terms"].is_array()) {
            fail(ErrorKind::MalformedInput, "term list object needs 'terms'");
        }
        terms = &doc["terms"];
        if (doc.contains("constant")) {
            if (!doc["constant"].is_number()) {
                fail(ErrorKind::MalformedInput, "'constant' must be a number");
            }
            constant = doc["constant"].get<double>();
        }
        if (doc.contains("num_qubits")) {
            if (!doc["num_qubits"].is_number_unsigned()) {
                fail(ErrorKind::MalformedInput, "'num_qubits' must be >= 0");
            }
            num_qubits = doc["num_qubits"].get<std::size_t>();
        }
    } else if (!doc.is_array()) {
        fail(ErrorKind::MalformedInput, "term list must be array or object");
    }
    std::vector<DiagonalHamiltonian::Term> out;
    for (const auto &entry : *terms) {
        std::string pauli;
        double coeff = 0.0;
        if (entry.is_object() && entry.contains("pauli") &&
            entry["pauli"].is_string() && entry.contains("coeff") &&
            entry["coeff"].is_number()) {
            pauli = entry["pauli"].get<std::string>();
            coeff = entry["coeff"].get<double>();
            if (entry.contains("coeff_exact") && entry["coeff_exact"].is_string()) {
                coeff = to_double(parse_rational(entry["coeff_exact"].get<std::string>()));
            }
        } else if (entry.is_array() && entry.size() == 2 && entry[0].is_string() &&
                   entry[1].is_number()) {
            pauli = entry[0].get<std::string>();
            coeff = entry[1].get<double>();
        } else {
            fail(ErrorKind::MalformedInput, "bad term entry " + entry.dump());
        }
        if (pauli.find_first_not_of("IZ") != std::string::npos) {
            fail(ErrorKind::MalformedInput,
                 "only I/Z Pauli strings are diagonal: '" + pauli + "'");
        }
        if (!num_qubits) {
            num_qubits = pauli.size();
        } else if (*num_qubits != pauli.size()) {
            fail(ErrorKind::LengthMismatch, "Pauli strings differ in length");
        }
        if (pauli.size() > 63) {
            fail(ErrorKind::TooManyQubits, "at most 63 qubits supported");
        }
        std::uint64_t mask = 0;
        for (std::size_t k = 0; k < pauli.size(); ++k) {
            if (pauli[k] == 'Z') {
                mask |= std::uint64_t{1} << k;
            }
        }
        out.push_back({mask, coeff});
    }
    return DiagonalHamiltonian(num_qubits.value_or(0), std::move(out), constant);
}

inline nlohmann::json term_list_to_json(const DiagonalHamiltonian &h) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &t : h.terms()) {
        std::string s(h.num_qubits(), 'I');
        for (const auto q : DiagonalHamiltonian::qubits_of(t.mask)) {
            s[q - 1] = 'Z';
        }
        terms.push_back({{"pauli", s}, {"coeff", t.coeff}});
    }
    return {{"num_qubits", h.num_qubits()},
            {"constant", h.constant()},
            {"terms", terms}};
}

inline nlohmann::json spectrum_to_json(const Spectrum &s, bool with_levels) {
    nlohmann::json doc = {{"num_qubits", s.num_qubits},
                          {"ground_energy", s.ground_energy},
                          {"ground_states", s.ground_states},
                          {"gap", s.gap},
                          {"num_levels", s.levels.size()}};
    if (with_levels) {
        nlohmann::json levels = nlohmann::json::array();
        for (const auto &l : s.levels) {
            levels.push_back({{"energy", l.energy}, {"states", l.states}});
        }
        doc["levels"] = std::move(levels);
    }
    return doc;
}

} // namespace hcqaoa
