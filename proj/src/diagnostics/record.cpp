#include "mhdb/diagnostics/record.hpp"

#include <algorithm>
#include <cmath>

#include "mhdb/diagnostics/norms.hpp"
#include "mhdb/errors.hpp"
#include "mhdb/simd/kernels.hpp"
#include "mhdb/spectral/calculus.hpp"
#include "mhdb/spectral/transform.hpp"

namespace mhdb {

DiagnosticsRecord compute_record(const State& state, const Params& params) {
    DiagnosticsRecord r;
    r.t = state.t;
    const double u2 = l2_norm_squared(state.u);
    const double b2 = l2_norm_squared(state.b);
    const double th2 = l2_norm_squared(state.theta);
    r.energy = 0.5 * (u2 + b2 + th2);

    const double gu = gradient_norm_squared(state.u);
    const double gb = gradient_norm_squared(state.b);
    const double gth = gradient_norm_squared(state.theta);
    r.dissipation = params.nu * gu + params.eta * gb + params.kappa * gth;
    r.k_functional = gu + gb + gth;
    r.buoyancy_flux = params.g * inner_product(state.theta, state.u[2]);

    for (int s = 1; s <= 3; ++s) {
        const auto i = static_cast<std::size_t>(s - 1);
        r.u_sobolev[i] = sobolev_norm(state.u, s);
        r.b_sobolev[i] = sobolev_norm(state.b, s);
        r.theta_sobolev[i] = sobolev_norm(state.theta, s);
    }

    const RealGrid theta = inverse_transform(state.theta);
    const auto values = theta.values();
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    r.theta_min = *lo;
    r.theta_max = *hi;
    r.theta_l2 = std::sqrt(th2);
    r.div_u = divergence_residual(state.u);
    r.div_b = divergence_residual(state.b);
    return r;
}

EnergyBalance energy_balance_residual(std::span<const DiagnosticsRecord> history) {
    if (history.size() < 3) throw ConfigError("history", "energy balance needs at least 3 records");
    const double spacing = history[1].t - history[0].t;
    if (!(spacing > 0.0)) throw ConfigError("history", "record times must increase");
    for (std::size_t i = 1; i < history.size(); ++i) {
        const double d = history[i].t - history[i - 1].t;
        if (std::abs(d - spacing) > 1e-9 * spacing)
            throw ConfigError("history", "records are not uniformly spaced in time");
    }

    EnergyBalance out;
    for (std::size_t i = 1; i + 1 < history.size(); ++i) {
        const double dEdt = (history[i + 1].energy - history[i - 1].energy) / (2.0 * spacing);
        out.t.push_back(history[i].t);
        out.residual.push_back(dEdt - (history[i].buoyancy_flux - history[i].dissipation));
    }
    return out;
}

ThetaDrift theta_conservation(std::span<const DiagnosticsRecord> history) {
    if (history.empty()) throw ConfigError("history", "theta drift needs at least one record");
    const DiagnosticsRecord& first = history.front();
    const double extent = std::max(std::abs(first.theta_min), std::abs(first.theta_max));
    ThetaDrift drift;
    drift.duration = history.back().t - first.t;
    double previous = first.theta_l2;
    for (const auto& r : history) {
        if (first.theta_l2 > 0.0)
            drift.l2_relative_drift = std::max(drift.l2_relative_drift, std::abs(r.theta_l2 - first.theta_l2) / first.theta_l2);
        if (extent > 0.0) {
            drift.min_relative_drift = std::max(drift.min_relative_drift, std::abs(r.theta_min - first.theta_min) / extent);
            drift.max_relative_drift = std::max(drift.max_relative_drift, std::abs(r.theta_max - first.theta_max) / extent);
        }
        if (r.theta_l2 > previous * (1.0 + 1e-14)) drift.l2_nonincreasing = false;
        previous = r.theta_l2;
    }
    return drift;
}

}  // namespace mhdb
