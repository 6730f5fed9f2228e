#pragma once

#include "mhdb/spectral/field.hpp"

namespace mhdb {

/// Both sides of an integration-by-parts identity evaluated by grid quadrature.
struct IdentityResidual {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;  ///< |lhs - rhs|
    double scale = 0.0;     ///< mean of the cubed gradient magnitude, the natural size of each side

    double relative() const noexcept { return scale > 0.0 ? residual / scale : residual; }
};

/// Horizontal identity for divergence-free u (sums over j, k in {1, 2}):
///   sum int u_j d_j u_k Lap_h u_k
///     = 1/2 sum int d_j u_k d_j u_k d3 u3 - int d1u1 d2u2 d3u3 + int d1u2 d2u1 d3u3.
/// Fields are restricted to the dealiasing band, where the quadrature is exact.
/// Throws PreconditionError if u is not divergence-free.
IdentityResidual horizontal_identity_residual(const VectorField& u);

/// Coupled identity along axis i (0, 1, 2), summed over j, k:
///   int u_j d_j u_k d_ii u_k - b_j d_j b_k d_ii u_k + u_j d_j b_k d_ii b_k - b_j d_j u_k d_ii b_k
///     = int -d_i u_j d_j u_k d_i u_k + d_i b_j d_j b_k d_i u_k - d_i u_j d_j b_k d_i b_k + d_i b_j d_j u_k d_i b_k.
IdentityResidual coupled_identity_residual(const VectorField& u, const VectorField& b, int axis);

}  // namespace mhdb
