#include "mhdb/spectral/transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "mhdb/errors.hpp"

namespace mhdb {
namespace {

constexpr double kHermitianTolerance = 1e-10;

std::size_t half_size(int n) { return static_cast<std::size_t>(n) * n * (n / 2 + 1); }

// FFTW's planner is not thread-safe, execution with new arrays is. Plans are
// built once per resolution with FFTW_ESTIMATE so the chosen algorithm, and
// therefore the rounding, does not depend on timing measurements.
struct Plans {
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
};

const Plans& plans_for(int n) {
    static std::mutex mutex;
    static std::map<int, Plans> cache;

    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    AlignedVector<double> real(static_cast<std::size_t>(n) * n * n);
    AlignedVector<Complex> half(half_size(n));
    auto* h = reinterpret_cast<fftw_complex*>(half.data());
    Plans p;
    p.r2c = fftw_plan_dft_r2c_3d(n, n, n, real.data(), h, FFTW_ESTIMATE);
    p.c2r = fftw_plan_dft_c2r_3d(n, n, n, h, real.data(), FFTW_ESTIMATE);
    if (p.r2c == nullptr || p.c2r == nullptr) throw ConfigError("N", "FFTW could not plan this resolution");
    return cache.emplace(n, p).first->second;
}

AlignedVector<Complex>& half_buffer(int n) {
    thread_local std::map<int, AlignedVector<Complex>> buffers;
    auto& buf = buffers[n];
    if (buf.size() != half_size(n)) buf.assign(half_size(n), Complex{});
    return buf;
}

}  // namespace

double hermitian_defect(const SpectralField& f) {
    const int n = f.resolution();
    double scale = 0.0;
    double defect = 0.0;
    const Complex* c = f.data();
    for (int j1 = 0; j1 < n; ++j1) {
        const int m1 = mirror_index(j1, n);
        for (int j2 = 0; j2 < n; ++j2) {
            const int m2 = mirror_index(j2, n);
            const std::size_t row = (static_cast<std::size_t>(j1) * n + j2) * n;
            const std::size_t mrow = (static_cast<std::size_t>(m1) * n + m2) * n;
            for (int j3 = 0; j3 < n; ++j3) {
                const Complex a = c[row + j3];
                const Complex b = c[mrow + mirror_index(j3, n)];
                scale = std::max(scale, std::norm(a));
                defect = std::max(defect, std::norm(a - std::conj(b)));
            }
        }
    }
    return scale > 0.0 ? std::sqrt(defect / scale) : 0.0;
}

void forward_transform(const RealGrid& grid, SpectralField& out) {
    const int n = grid.resolution();
    if (out.resolution() != n) out = SpectralField(n);
    const Plans& plans = plans_for(n);
    auto& half = half_buffer(n);
    fftw_execute_dft_r2c(plans.r2c, const_cast<double*>(grid.data()),
                         reinterpret_cast<fftw_complex*>(half.data()));

    const double norm = 1.0 / (static_cast<double>(n) * n * n);
    const int hn = n / 2 + 1;
    Complex* c = out.data();
    for (int j1 = 0; j1 < n; ++j1) {
        const int m1 = mirror_index(j1, n);
        for (int j2 = 0; j2 < n; ++j2) {
            const int m2 = mirror_index(j2, n);
            const Complex* src = half.data() + (static_cast<std::size_t>(j1) * n + j2) * hn;
            const Complex* mirror = half.data() + (static_cast<std::size_t>(m1) * n + m2) * hn;
            Complex* dst = c + (static_cast<std::size_t>(j1) * n + j2) * n;
            for (int j3 = 0; j3 < hn; ++j3) dst[j3] = src[j3] * norm;
            for (int j3 = hn; j3 < n; ++j3) dst[j3] = std::conj(mirror[n - j3]) * norm;
        }
    }
}

SpectralField forward_transform(const RealGrid& grid) {
    SpectralField out(grid.resolution());
    forward_transform(grid, out);
    return out;
}

namespace detail {

void inverse_transform_unchecked(const SpectralField& f, RealGrid& out) {
    const int n = f.resolution();
    if (out.resolution() != n) out = RealGrid(n);
    const Plans& plans = plans_for(n);
    auto& half = half_buffer(n);
    const int hn = n / 2 + 1;
    const Complex* c = f.data();
    for (std::size_t row = 0; row < static_cast<std::size_t>(n) * n; ++row)
        std::copy_n(c + row * n, hn, half.data() + row * hn);
    fftw_execute_dft_c2r(plans.c2r, reinterpret_cast<fftw_complex*>(half.data()), out.data());
}

}  // namespace detail

void inverse_transform(const SpectralField& f, RealGrid& out) {
    const double defect = hermitian_defect(f);
    if (!(defect <= kHermitianTolerance))
        throw DataCorruptionError("coefficients are not Hermitian (relative defect " + std::to_string(defect) + ")");
    detail::inverse_transform_unchecked(f, out);
}

RealGrid inverse_transform(const SpectralField& f) {
    RealGrid out(f.resolution());
    inverse_transform(f, out);
    return out;
}

}  // namespace mhdb
