#pragma once

#include <array>
#include <span>
#include <vector>

#include "mhdb/dynamics/params.hpp"
#include "mhdb/dynamics/state.hpp"

namespace mhdb {

/// Running monitor values attached to each record (see MonitorAccumulators).
struct MonitorColumns {
    double j2 = 0.0;
    double l2 = 0.0;
    double ps_u2 = 0.0;
    double ps_u3 = 0.0;
    double ps_b2 = 0.0;
    double ps_b3 = 0.0;

    friend bool operator==(const MonitorColumns&, const MonitorColumns&) = default;
};

/// One time sample of every monitored scalar.
struct DiagnosticsRecord {
    double t = 0.0;
    double energy = 0.0;         ///< (||u||^2 + ||b||^2 + ||theta||^2) / 2
    double dissipation = 0.0;    ///< nu ||grad u||^2 + eta ||grad b||^2 + kappa ||grad theta||^2
    double buoyancy_flux = 0.0;  ///< g <theta, u3>
    double k_functional = 0.0;   ///< ||grad u||^2 + ||grad b||^2 + ||grad theta||^2
    std::array<double, 3> u_sobolev{};      ///< H1, H2, H3 norms of u
    std::array<double, 3> b_sobolev{};      ///< H1, H2, H3 norms of b
    std::array<double, 3> theta_sobolev{};  ///< H1, H2, H3 norms of theta
    double theta_min = 0.0;
    double theta_max = 0.0;
    double theta_l2 = 0.0;
    double div_u = 0.0;
    double div_b = 0.0;
    MonitorColumns monitors;

    friend bool operator==(const DiagnosticsRecord&, const DiagnosticsRecord&) = default;
};

/// All instantaneous entries of the record; monitors are left at zero.
DiagnosticsRecord compute_record(const State& state, const Params& params);

struct EnergyBalance {
    std::vector<double> t;         ///< interior sample times
    std::vector<double> residual;  ///< dE/dt (central difference) - (buoyancy_flux - dissipation)
};

/// Requires at least 3 uniformly spaced records; throws ConfigError otherwise.
EnergyBalance energy_balance_residual(std::span<const DiagnosticsRecord> history);

struct ThetaDrift {
    double duration = 0.0;
    double l2_relative_drift = 0.0;   ///< max |theta_l2(t) - theta_l2(0)| / theta_l2(0)
    double min_relative_drift = 0.0;  ///< relative to max(|theta_min(0)|, |theta_max(0)|)
    double max_relative_drift = 0.0;
    bool l2_nonincreasing = true;     ///< theta_l2 never grows by more than 1e-14 relative
};

/// Throws ConfigError for an empty history.
ThetaDrift theta_conservation(std::span<const DiagnosticsRecord> history);

}  // namespace mhdb
