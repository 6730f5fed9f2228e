#pragma once

#include <optional>

#include "mhdb/dynamics/params.hpp"
#include "mhdb/dynamics/state.hpp"

namespace mhdb {

/// P_sigma P_M ((u.grad) v), evaluated pseudo-spectrally with the two-thirds rule.
/// u must be divergence-free. Inputs are masked to the dealiasing band first, so
/// the result equals the truncated convolution sum exactly. cutoff defaults to
/// dealias_cutoff(N).
VectorField advect(const VectorField& u, const VectorField& v, std::optional<int> cutoff = std::nullopt);

/// P_M (u.grad theta) for a scalar; no Leray projection.
SpectralField scalar_advect(const VectorField& u, const SpectralField& theta,
                            std::optional<int> cutoff = std::nullopt);

/// Nonlinear and buoyancy part of the truncated system:
///   du = -B(u,u) + B(b,b) + g P_sigma(theta e3)
///   db = -B(u,b) + B(b,u)
///   dtheta = -u.grad theta
/// Diffusion is left to the integrator. Throws BlowUpError if any coefficient is
/// non-finite and DataCorruptionError if the output loses Hermitian symmetry.
Tendency rhs(const State& state, const Params& params);

/// As rhs(), also reporting max over the grid of |u| + |b| for the input state.
Tendency rhs(const State& state, const Params& params, double& max_speed);

namespace detail {
/// rhs() writing into a caller-owned Tendency of matching resolution.
void rhs_into(const State& state, const Params& params, Tendency& out, double& max_speed);
}  // namespace detail

/// Pressure p with grad p = F - P_sigma F, where F = -(u.grad)u + (b.grad)b + g theta e3
/// truncated at M. p(0) = 0.
SpectralField pressure_recover(const State& state, const Params& params);

/// Unprojected truncated momentum forcing F used by pressure_recover.
VectorField momentum_forcing(const State& state, const Params& params);

}  // namespace mhdb
