#pragma once

#include <cstdint>

namespace mhdb {

/// Physical and numerical constants of one run.
struct Params {
    double nu = 0.0;     ///< kinematic viscosity
    double eta = 0.0;    ///< magnetic diffusivity
    double kappa = 0.0;  ///< thermal diffusivity
    double g = 1.0;      ///< buoyancy constant
    int n = 32;          ///< grid points (and stored modes) per axis
    int cutoff = 10;     ///< Galerkin cutoff M, max_i |k_i| <= M
    double dt = 1e-3;
    double t_end = 1.0;
    std::uint64_t seed = 0;
    double blowup_ceiling = 1e6;  ///< abort threshold on ||grad u||_L2

    /// Throws ConfigError naming the first offending key.
    void validate() const;

    /// Number of fixed steps from t = 0 to t_end; throws if t_end is not a multiple of dt.
    long step_count() const;

    friend bool operator==(const Params&, const Params&) = default;
};

}  // namespace mhdb
