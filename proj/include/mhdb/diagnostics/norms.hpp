#pragma once

#include "mhdb/spectral/field.hpp"

namespace mhdb {

/// sqrt(sum_k |f(k)|^2 (1 + |k|^2)^s) with k on the integer lattice (no 2 pi factors).
/// Throws ConfigError for s < 0.
double sobolev_norm(const SpectralField& f, double s);
double sobolev_norm(const VectorField& v, double s);

/// (N^-3 sum_j |g(x_j)|^p)^(1/p) by collocation on the grid; p = infinity gives max |g|.
/// Throws ConfigError unless p >= 1.
double lp_norm(const RealGrid& grid, double p);
double lp_norm(const SpectralField& f, double p);

}  // namespace mhdb
