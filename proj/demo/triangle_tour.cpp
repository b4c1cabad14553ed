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

// Compiles the triangle, checks its spectrum, runs QAOA and decodes the
// most probable outcomes back into tours.

#include <iostream>

#include <hcqaoa/graph.hpp>
#include <hcqaoa/hamiltonian.hpp>
#include <hcqaoa/ising.hpp>
#include <hcqaoa/solve.hpp>

int main() {
    using namespace hcqaoa;
    const Graph g(3, {{1, 2}, {2, 3}, {3, 1}});
    const IsingModel model = normalized(compile(g));
    const DiagonalHamiltonian h(model);

    for (const auto &t : to_term_list(model, false)) {
        std::cout << t.pauli << "  " << to_string(t.coeff) << '\n';
    }
    const auto s = full_spectrum(h);
    std::cout << "ground " << s.ground_energy << ", gap " << s.gap << '\n';

    SolveConfig cfg;
    cfg.layers = 2;
    cfg.optimizer.max_evals = 5000;
    cfg.optimizer.restarts = 4;
    cfg.optimizer.xtol = 1e-4;
    cfg.optimizer.ftol = 1e-6;
    cfg.optimizer.initial_step = 0.3;
    const auto report = qaoa_solve(h, cfg);
    std::cout << "<H> = " << report.expectation_final
              << ", ground mass = " << report.ground_state_mass << '\n';

    const auto ranked = report.final_distribution.ranked();
    for (std::size_t i = 0; i < 4 && i < ranked.size(); ++i) {
        const auto &[bits, count] = ranked[i];
        const auto tour = decode(Assignment(bits), g);
        std::cout << bits << "  " << count << "  ";
        if (tour.valid()) {
            for (const int v : tour.order) {
                std::cout << v << ' ';
            }
        } else {
            std::cout << "invalid (" << to_string(tour.violation->constraint) << ')';
        }
        std::cout << '\n';
    }
}
