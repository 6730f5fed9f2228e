#pragma once

#include <array>

#include "mhdb/diagnostics/record.hpp"
#include "mhdb/dynamics/state.hpp"

namespace mhdb {

/// r solving 2/r + 3/s = 3/4 + 1/(2s), i.e. r = 2 / (3/4 - 5/(2s)).
/// Throws std::out_of_range unless s > 10/3; s = infinity gives 8/3.
double prodi_serrin_r(double s);

/// Instantaneous integrands of the anisotropic monitors.
struct MonitorSample {
    double horizontal_gradient = 0.0;   ///< ||grad_h u||^2 + ||grad_h b||^2
    double vertical_gradient = 0.0;     ///< ||d3 u||^2 + ||d3 b||^2
    double horizontal_hessian = 0.0;    ///< ||grad grad_h u||^2 + ||grad grad_h b||^2
    double vertical_hessian = 0.0;      ///< ||grad d3 u||^2 + ||grad d3 b||^2
    std::array<double, 4> lebesgue{};   ///< ||f||_{L^s}^r for f = u2, u3, b2, b3
};

MonitorSample monitor_sample(const State& state, double s, double r);

/// Running sup-and-integral state over the window [window_start, t]:
///   J^2 = sup ||grad_h (u,b)||^2 + int ||grad grad_h (u,b)||^2
///   L^2 = sup ||d3 (u,b)||^2     + int ||grad d3 (u,b)||^2
/// plus int ||f||_{L^s}^r for f in {u2, u3, b2, b3}. Integrals use the trapezoid rule.
struct MonitorAccumulators {
    double window_start = 0.0;
    double s = 4.0;
    double r = 16.0;

    double horizontal_sup = 0.0;
    double vertical_sup = 0.0;
    double horizontal_integral = 0.0;
    double vertical_integral = 0.0;
    std::array<double, 4> lebesgue_integral{};

    bool started = false;
    MonitorSample last;

    double j2() const noexcept { return horizontal_sup + horizontal_integral; }
    double l2() const noexcept { return vertical_sup + vertical_integral; }
    MonitorColumns columns() const noexcept;
};

/// Fresh accumulators; r follows from s via prodi_serrin_r.
MonitorAccumulators make_monitors(double window_start, double s);

/// Folds in the sample at state.t, dt after the previous one. States before the
/// window start leave the accumulators unchanged.
MonitorAccumulators update_monitors(MonitorAccumulators acc, const State& state, double dt);

}  // namespace mhdb
