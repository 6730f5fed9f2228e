#pragma once

#include <span>
#include <string>
#include <vector>

#include "mhdb/experiments/simulation.hpp"

namespace mhdb {

struct SweepCase {
    std::string label;
    double parameter = 0.0;  ///< kappa, cutoff M, or perturbation size delta
    double error = 0.0;      ///< sweep-specific distance, see each sweep
    double growth = 0.0;     ///< continuous dependence: max sqrt(X) / sqrt(X(0)); NaN elsewhere
    bool blown_up = false;
    double wall_seconds = 0.0;
};

struct SweepResult {
    std::string kind;
    std::vector<SweepCase> cases;
    double fitted_order = 0.0;   ///< least-squares slope magnitude; NaN when no fit was possible
    double order_stderr = 0.0;   ///< standard error of the slope (0 for a two-point fit)
    bool monotone = false;       ///< error strictly decreasing along the sweep direction
    int threads = 1;
};

/// Least-squares slope of log(y) against log(x) with its standard error.
struct PowerFit {
    double slope = 0.0;
    double stderr_slope = 0.0;
};
PowerFit fit_power_law(std::span<const double> x, std::span<const double> y);

/// Runs each kappa with otherwise identical configuration against a kappa = 0
/// reference and reports e(kappa) = max over stored snapshots of the L2 distance
/// of (u, b, theta). Snapshots are taken every snapshot_every steps (or every
/// diagnostics_every if that is 0). fitted_order is the slope of log e vs log kappa.
SweepResult kappa_sweep(const RunConfig& config, std::span<const double> kappas, int threads = 1);

/// Runs the Galerkin system for each cutoff M (largest one is the reference) from
/// shared initial data and reports the L2 distance to the reference at t_end.
/// fitted_order is the decay exponent of e(M)^2. Requires at least 3 cutoffs.
SweepResult galerkin_convergence(const RunConfig& config, std::span<const int> cutoffs, int threads = 1);

/// Base run plus runs with u0 perturbed by delta times a unit random-sobolev field
/// (re-projected). error = max_t sqrt(X), growth = max_t sqrt(X) / sqrt(X(0)), where
/// X = ||u - u~||^2 + ||b - b~||^2 + ||theta - theta~||^2. fitted_order is the slope of
/// log max sqrt(X) against log delta.
SweepResult continuous_dependence(const RunConfig& config, std::span<const double> deltas, int threads = 1);

/// Smallest even grid size with only 2, 3, 5 as prime factors whose dealiasing band holds `cutoff`.
int grid_for_cutoff(int cutoff);

/// L2 distance of (u, b, theta) between two states of possibly different resolution.
double state_distance(const State& a, const State& b);

}  // namespace mhdb
