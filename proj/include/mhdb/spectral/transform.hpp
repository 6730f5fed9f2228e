#pragma once

#include "mhdb/spectral/field.hpp"

namespace mhdb {

/// Largest |f(k) - conj f(-k)| relative to max |f(k)|; zero for the zero field.
double hermitian_defect(const SpectralField& f);

/// Coefficients of the real samples: f(k) = N^-3 sum_j g(x_j) exp(-2 pi i k.x_j).
/// A constant grid c yields f(0) = c.
SpectralField forward_transform(const RealGrid& grid);
void forward_transform(const RealGrid& grid, SpectralField& out);

/// Real samples of sum_k f(k) exp(2 pi i k.x_j). Throws DataCorruptionError if the
/// coefficients are not Hermitian to 1e-10 (relative).
RealGrid inverse_transform(const SpectralField& f);
void inverse_transform(const SpectralField& f, RealGrid& out);

namespace detail {
/// Inverse transform without the Hermitian check, for solver-internal fields.
void inverse_transform_unchecked(const SpectralField& f, RealGrid& out);
}  // namespace detail

}  // namespace mhdb
