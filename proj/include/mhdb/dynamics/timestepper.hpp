#pragma once

#include <array>
#include <utility>

#include "mhdb/dynamics/nonlinear.hpp"
#include "mhdb/simd/aligned.hpp"

namespace mhdb {

struct StepReport {
    double t_new = 0.0;
    double cfl_number = 0.0;               ///< dt * max(|u|+|b|) * N at the start of the step
    double max_divergence_residual = 0.0;  ///< of u and b after re-projection
    bool blowup_flag = false;              ///< non-finite state or ||grad u|| above the ceiling
};

/// Classical RK4 on the integrating-factor variables: the linear diffusion
/// exp(-4 pi^2 |k|^2 (nu, eta, kappa) t) is applied exactly, the nonlinear
/// tendency by RK4. u and b are Leray-projected after every step.
class Stepper {
public:
    explicit Stepper(const Params& params);

    /// Advances `state` by params.dt in place. Lets BlowUpError from rhs propagate.
    StepReport advance(State& state);

    const Params& params() const noexcept { return params_; }

private:
    Params params_;
    bool diffusive_ = false;
    std::array<AlignedVector<double>, 3> half_step_;  ///< exp(-4 pi^2 |k|^2 D dt/2) for D = nu, eta, kappa
    State stage_, ey_;
    Tendency ka_, kb_, kc_, kd_;
};

/// One step from `state`; see Stepper.
std::pair<State, StepReport> step(const State& state, const Params& params);

/// safety * (1/N) / max(|u| + |b|), capped at t_end - t. safety must lie in (0, 1].
double cfl_dt(const State& state, const Params& params, double safety);

}  // namespace mhdb
