#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mhdb/dynamics/params.hpp"
#include "mhdb/dynamics/state.hpp"

namespace mhdb {

/// Named initial data. Presets:
///   taylor-green    u = A (sin x cos y cos z, -cos x sin y cos z, 0) with x = 2 pi x1 etc., b = 0
///   mhd-vortex      u = A (sin z, sin x, sin y), b = A (cos y, cos z, cos x)
///   random-sobolev  coefficients (1+|k|^2)^(-sigma/2) with random phases, u and b
///                   projected, each field rescaled to L2 norm A (theta: theta_amplitude)
/// For the two analytic presets theta = theta_amplitude cos x cos y sin z.
struct InitialCondition {
    std::string preset = "taylor-green";
    double amplitude = 1.0;
    double sigma = 4.0;
    /// Defaults to `amplitude` for random-sobolev and 0 otherwise.
    std::optional<double> theta_amplitude;
    /// Lattice radius on which random-sobolev phases are drawn; defaults to params.cutoff.
    /// Sharing it across runs gives bit-identical shared modes at different cutoffs.
    std::optional<int> generation_cutoff;

    friend bool operator==(const InitialCondition&, const InitialCondition&) = default;
};

bool is_known_preset(std::string_view name);

/// Divergence-free, zero-mean u and b supported in |k|_inf <= params.cutoff; t = 0.
/// Deterministic in params.seed. Throws ConfigError("preset") for unknown names.
State make_initial_condition(const InitialCondition& ic, const Params& params);

/// Random divergence-free zero-mean vector field with spectrum (1+|k|^2)^(-sigma/2)
/// inside |k|_inf <= cutoff and unit L2 norm; used by the self-checks.
VectorField random_solenoidal_field(int n, int cutoff, double sigma, std::uint64_t seed);

/// Random zero-mean scalar with the same spectrum and unit L2 norm.
SpectralField random_scalar_field(int n, int cutoff, double sigma, std::uint64_t seed);

}  // namespace mhdb
