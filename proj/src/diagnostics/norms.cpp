#include "mhdb/diagnostics/norms.hpp"

#include <cmath>

#include "mhdb/errors.hpp"
#include "mhdb/simd/kernels.hpp"
#include "mhdb/spectral/transform.hpp"

namespace mhdb {

double sobolev_norm(const SpectralField& f, double s) {
    if (!(s >= 0.0)) throw ConfigError("s", "Sobolev order must be >= 0");
    const auto& wn = wavenumbers(f.resolution());
    AlignedVector<double> weight(f.size());
    const bool integral = s == std::floor(s) && s <= 8.0;
    for (std::size_t i = 0; i < weight.size(); ++i) {
        const double base = 1.0 + wn.k_squared[i];
        if (integral) {
            double w = 1.0;
            for (int j = 0; j < static_cast<int>(s); ++j) w *= base;
            weight[i] = w;
        } else {
            weight[i] = std::pow(base, s);
        }
    }
    return std::sqrt(simd::active().weighted_norm2(f.data(), weight.data(), f.size()));
}

double sobolev_norm(const VectorField& v, double s) {
    double sum = 0.0;
    for (const auto& f : v.c) {
        const double n = sobolev_norm(f, s);
        sum += n * n;
    }
    return std::sqrt(sum);
}

double lp_norm(const RealGrid& grid, double p) {
    if (!(p >= 1.0)) throw ConfigError("p", "Lebesgue exponent must be >= 1");
    const auto& k = simd::active();
    const std::size_t len = grid.size();
    if (std::isinf(p)) return k.max_abs(grid.data(), len);
    if (p == 2.0) return std::sqrt(k.dot(grid.data(), grid.data(), len) / static_cast<double>(len));
    double sum = 0.0;
    if (p == 4.0) {
        for (double v : grid.values()) sum += (v * v) * (v * v);
    } else {
        for (double v : grid.values()) sum += std::pow(std::abs(v), p);
    }
    return std::pow(sum / static_cast<double>(len), 1.0 / p);
}

double lp_norm(const SpectralField& f, double p) { return lp_norm(inverse_transform(f), p); }

}  // namespace mhdb
