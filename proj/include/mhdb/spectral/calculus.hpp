#pragma once

#include "mhdb/spectral/field.hpp"

namespace mhdb {

/// Derivative along axis (0, 1 or 2): multiplier 2 pi i k_axis.
SpectralField partial(const SpectralField& f, int axis);

/// Second derivative d/dx_a d/dx_b: multiplier -4 pi^2 k_a k_b.
SpectralField second_partial(const SpectralField& f, int a, int b);

VectorField gradient(const SpectralField& f);
SpectralField divergence(const VectorField& v);

/// Multiplier -4 pi^2 |k|^2.
SpectralField laplacian(const SpectralField& f);

/// d11 + d22 only: multiplier -4 pi^2 (k1^2 + k2^2).
SpectralField horizontal_laplacian(const SpectralField& f);

/// Removes the component of each coefficient vector along k; the k = 0 mode is untouched.
VectorField leray_project(VectorField v);
void leray_project_inplace(VectorField& v);

/// Zeros every coefficient with max_i |k_i| > cutoff. Requires 0 <= cutoff <= N/2 - 1.
SpectralField galerkin_truncate(SpectralField f, int cutoff);
void galerkin_truncate_inplace(SpectralField& f, int cutoff);
void galerkin_truncate_inplace(VectorField& v, int cutoff);

/// Largest cube radius M such that products of two fields supported in |k|_inf <= M
/// alias nothing back into the band (3M < N). Equals floor(N/3) unless 3 divides N.
int dealias_cutoff(int n);

/// Two-thirds rule: zeros modes with max_i |k_i| > dealias_cutoff(N).
SpectralField dealias_mask(SpectralField f);

/// Integral over the torus of a*b for the real fields represented: Re sum conj(a) b.
double inner_product(const SpectralField& a, const SpectralField& b);
double inner_product(const VectorField& a, const VectorField& b);

/// Squared L2 norm over the unit torus (Parseval).
double l2_norm_squared(const SpectralField& f);
double l2_norm_squared(const VectorField& v);

/// max_k |2 pi k.v(k)| relative to max_k 2 pi |k| |v(k)|; zero when v has no k != 0 content.
double divergence_residual(const VectorField& v);

bool all_finite(const SpectralField& f) noexcept;

}  // namespace mhdb

namespace mhdb {

/// ||grad f||^2 over the unit torus: sum 4 pi^2 |k|^2 |f(k)|^2.
double gradient_norm_squared(const SpectralField& f);
double gradient_norm_squared(const VectorField& v);

}  // namespace mhdb
