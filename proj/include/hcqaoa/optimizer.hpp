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
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"

namespace hcqaoa {

/// Axis-aligned parameter box.
struct Box {
    std::vector<double> lower;
    std::vector<double> upper;

    static Box uniform(std::size_t dim, double lo, double hi) {
        return {std::vector<double>(dim, lo), std::vector<double>(dim, hi)};
    }

    [[nodiscard]] std::size_t size() const noexcept { return lower.size(); }

    void clamp(std::vector<double> &x) const {
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = std::clamp(x[i], lower[i], upper[i]);
        }
    }
};

struct OptimizerConfig {
    std::size_t max_evals = 2000; ///< total across all restarts
    double xtol = 1e-6;
    double ftol = 1e-9;
    std::size_t restarts = 1; ///< number of independent starts
    std::uint64_t seed = 0;
    std::optional<Box> bounds;
    /// Initial simplex edge; unset uses 5% of each coordinate (2.5e-4 at 0).
    std::optional<double> initial_step;
    /// Dimension-dependent coefficients (Gao & Han) instead of (1, 2, .5, .5).
    bool adaptive = true;

    void validate() const {
        if (max_evals < 1) {
            fail(ErrorKind::InvalidArgument, "max_evals must be >= 1");
        }
        if (!(xtol > 0.0) || !(ftol > 0.0)) {
            fail(ErrorKind::InvalidArgument, "tolerances must be > 0");
        }
        if (restarts < 1) {
            fail(ErrorKind::InvalidArgument, "restarts must be >= 1");
        }
        if (initial_step && !(*initial_step > 0.0)) {
            fail(ErrorKind::InvalidArgument, "initial_step must be > 0");
        }
    }
};

struct TracePoint {
    std::size_t eval;
    double value;
};

struct OptimizationResult {
    std::vector<double> best_params;
    double best_value = std::numeric_limits<double>::infinity();
    std::vector<TracePoint> trace;
    std::size_t evals_used = 0;
    bool converged = false;
    std::size_t best_restart = 0;
};

/// Nelder-Mead simplex minimisation with restarts. The evaluation budget is
/// shared: each start gets an equal share of what earlier starts left over.
/// Start 0 begins at x0; later starts draw uniformly from the bounds (seeded
/// per restart) or, without bounds, re-seed a fresh simplex at the incumbent.
template <class Objective>
    requires std::invocable<Objective &, std::span<const double>>
OptimizationResult minimize(Objective &&f, std::vector<double> x0,
                            const OptimizerConfig &cfg) {
    cfg.validate();
    const std::size_t d = x0.size();
    if (d == 0) {
        fail(ErrorKind::InvalidArgument, "cannot minimize over zero parameters");
    }
    if (cfg.bounds && cfg.bounds->size() != d) {
        fail(ErrorKind::DimensionMismatch, "bounds dimension mismatch");
    }
    const double dd = static_cast<double>(d);
    const double alpha = 1.0;
    const double gamma = cfg.adaptive ? 1.0 + 2.0 / dd : 2.0;
    const double rho = cfg.adaptive ? 0.75 - 1.0 / (2.0 * dd) : 0.5;
    const double sigma = cfg.adaptive ? 1.0 - 1.0 / dd : 0.5;

    OptimizationResult result;
    std::size_t budget = 0;
    std::size_t current_restart = 0;

    // Returns false once the run's budget is exhausted.
    auto evaluate = [&](std::vector<double> &x, double &fx) {
        if (budget == 0) {
            return false;
        }
        if (cfg.bounds) {
            cfg.bounds->clamp(x);
        }
        fx = static_cast<double>(f(std::span<const double>(x)));
        if (std::isnan(fx)) {
            fx = std::numeric_limits<double>::infinity();
        }
        --budget;
        result.trace.push_back({result.evals_used++, fx});
        if (fx < result.best_value || result.best_params.empty()) {
            result.best_value = fx;
            result.best_params = x;
            result.best_restart = current_restart;
        }
        return true;
    };

    std::size_t remaining = cfg.max_evals;
    for (std::size_t r = 0; r < cfg.restarts && remaining > 0; ++r) {
        current_restart = r;
        budget = std::max<std::size_t>(1, remaining / (cfg.restarts - r));
        const std::size_t budget_start = budget;

        std::vector<double> start = x0;
        if (r > 0) {
            if (cfg.bounds) {
                std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ULL + r);
                for (std::size_t i = 0; i < d; ++i) {
                    start[i] = std::uniform_real_distribution<double>(
                        cfg.bounds->lower[i], cfg.bounds->upper[i])(rng);
                }
            } else {
                start = result.best_params;
            }
        }

        std::vector<std::vector<double>> simplex(d + 1, start);
        std::vector<double> fs(d + 1, std::numeric_limits<double>::infinity());
        for (std::size_t i = 0; i < d; ++i) {
            auto &v = simplex[i + 1];
            const double step = cfg.initial_step.value_or(
                v[i] != 0.0 ? 0.05 * v[i] : 0.00025);
            v[i] += step;
            if (cfg.bounds && v[i] > cfg.bounds->upper[i]) {
                v[i] -= 2.0 * step;
            }
        }
        bool complete = true;
        for (std::size_t i = 0; i <= d && complete; ++i) {
            complete = evaluate(simplex[i], fs[i]);
        }

        bool converged = false;
        std::vector<std::size_t> idx(d + 1);
        std::vector<double> centroid(d), xr(d), xe(d), xc(d);
        while (complete) {
            std::iota(idx.begin(), idx.end(), 0);
            std::stable_sort(idx.begin(), idx.end(),
                             [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
            {
                std::vector<std::vector<double>> s2(d + 1);
                std::vector<double> f2(d + 1);
                for (std::size_t i = 0; i <= d; ++i) {
                    s2[i] = std::move(simplex[idx[i]]);
                    f2[i] = fs[idx[i]];
                }
                simplex = std::move(s2);
                fs = std::move(f2);
            }

            double xspread = 0.0;
            double fspread = 0.0;
            for (std::size_t i = 1; i <= d; ++i) {
                fspread = std::max(fspread, std::abs(fs[i] - fs[0]));
                for (std::size_t k = 0; k < d; ++k) {
                    xspread = std::max(xspread, std::abs(simplex[i][k] - simplex[0][k]));
                }
            }
            if (xspread <= cfg.xtol && fspread <= cfg.ftol) {
                converged = true;
                break;
            }

            std::fill(centroid.begin(), centroid.end(), 0.0);
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t k = 0; k < d; ++k) {
                    centroid[k] += simplex[i][k] / dd;
                }
            }
            const auto &worst = simplex[d];
            for (std::size_t k = 0; k < d; ++k) {
                xr[k] = centroid[k] + alpha * (centroid[k] - worst[k]);
            }
            double fr = 0.0;
            if (!evaluate(xr, fr)) {
                break;
            }

            bool shrink = false;
            if (fr < fs[0]) {
                for (std::size_t k = 0; k < d; ++k) {
                    xe[k] = centroid[k] + gamma * (xr[k] - centroid[k]);
                }
                double fe = 0.0;
                if (!evaluate(xe, fe)) {
                    simplex[d] = xr;
                    fs[d] = fr;
                    break;
                }
                if (fe < fr) {
                    simplex[d] = xe;
                    fs[d] = fe;
                } else {
                    simplex[d] = xr;
                    fs[d] = fr;
                }
            } else if (fr < fs[d - 1]) {
                simplex[d] = xr;
                fs[d] = fr;
            } else {
                const bool outside = fr < fs[d];
                for (std::size_t k = 0; k < d; ++k) {
                    xc[k] = outside ? centroid[k] + rho * (xr[k] - centroid[k])
                                    : centroid[k] + rho * (worst[k] - centroid[k]);
                }
                double fc = 0.0;
                if (!evaluate(xc, fc)) {
                    break;
                }
                if (outside ? fc <= fr : fc < fs[d]) {
                    simplex[d] = xc;
                    fs[d] = fc;
                } else {
                    shrink = true;
                }
            }
            if (shrink) {
                for (std::size_t i = 1; i <= d && complete; ++i) {
                    for (std::size_t k = 0; k < d; ++k) {
                        xc[k] = simplex[0][k] + sigma * (simplex[i][k] - simplex[0][k]);
                    }
                    double fc = 0.0;
                    complete = evaluate(xc, fc);
                    if (complete) {
                        simplex[i] = xc;
                        fs[i] = fc;
                    }
                }
            }
        }

        if (result.best_restart == r) {
            result.converged = converged;
        }
        remaining -= budget_start - budget;
    }
    return result;
}

} // namespace hcqaoa
