#include "mhdb/spectral/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mhdb/errors.hpp"
#include "mhdb/simd/kernels.hpp"

namespace mhdb {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_axis(int axis) {
    if (axis < 0 || axis > 2) throw ConfigError("axis", "axis must be 0, 1 or 2");
}

}  // namespace

SpectralField partial(const SpectralField& f, int axis) {
    require_axis(axis);
    const auto& wn = wavenumbers(f.resolution());
    const auto& k = wn.k[static_cast<std::size_t>(axis)];
    SpectralField out(f.resolution());
    const Complex* in = f.data();
    Complex* o = out.data();
    for (std::size_t i = 0; i < f.size(); ++i)
        o[i] = Complex(-in[i].imag(), in[i].real()) * (kTwoPi * k[i]);
    return out;
}

SpectralField second_partial(const SpectralField& f, int a, int b) {
    require_axis(a);
    require_axis(b);
    const auto& wn = wavenumbers(f.resolution());
    const auto& ka = wn.k[static_cast<std::size_t>(a)];
    const auto& kb = wn.k[static_cast<std::size_t>(b)];
    SpectralField out(f.resolution());
    const Complex* in = f.data();
    Complex* o = out.data();
    for (std::size_t i = 0; i < f.size(); ++i) o[i] = in[i] * (-kTwoPi * kTwoPi * ka[i] * kb[i]);
    return out;
}

VectorField gradient(const SpectralField& f) {
    VectorField g;
    for (int i = 0; i < 3; ++i) g[i] = partial(f, i);
    return g;
}

SpectralField divergence(const VectorField& v) {
    const int n = v.resolution();
    const auto& wn = wavenumbers(n);
    SpectralField out(n);
    Complex* o = out.data();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Complex s = wn.k[0][i] * v[0].data()[i] + wn.k[1][i] * v[1].data()[i] + wn.k[2][i] * v[2].data()[i];
        o[i] = Complex(-s.imag(), s.real()) * kTwoPi;
    }
    return out;
}

SpectralField laplacian(const SpectralField& f) {
    const auto& wn = wavenumbers(f.resolution());
    SpectralField out = f;
    Complex* o = out.data();
    for (std::size_t i = 0; i < out.size(); ++i) o[i] *= -kTwoPi * kTwoPi * wn.k_squared[i];
    return out;
}

SpectralField horizontal_laplacian(const SpectralField& f) {
    const auto& wn = wavenumbers(f.resolution());
    SpectralField out = f;
    Complex* o = out.data();
    for (std::size_t i = 0; i < out.size(); ++i)
        o[i] *= -kTwoPi * kTwoPi * (wn.k[0][i] * wn.k[0][i] + wn.k[1][i] * wn.k[1][i]);
    return out;
}

void leray_project_inplace(VectorField& v) {
    const int n = v.resolution();
    if (v[1].resolution() != n || v[2].resolution() != n)
        throw ConfigError("N", "vector components have different resolutions");
    const auto& wn = wavenumbers(n);
    simd::active().leray(wn.k[0].data(), wn.k[1].data(), wn.k[2].data(), wn.inv_k_squared.data(),
                         v[0].data(), v[1].data(), v[2].data(), v[0].size());
}

VectorField leray_project(VectorField v) {
    leray_project_inplace(v);
    return v;
}

void galerkin_truncate_inplace(SpectralField& f, int cutoff) {
    const int n = f.resolution();
    if (cutoff < 0 || cutoff > n / 2 - 1)
        throw ConfigError("M", "cutoff " + std::to_string(cutoff) + " outside [0, N/2-1] for N=" + std::to_string(n));
    const auto& norm = wavenumbers(n).cube_norm;
    Complex* c = f.data();
    for (std::size_t i = 0; i < f.size(); ++i)
        if (norm[i] > cutoff) c[i] = Complex{};
}

void galerkin_truncate_inplace(VectorField& v, int cutoff) {
    for (auto& f : v.c) galerkin_truncate_inplace(f, cutoff);
}

SpectralField galerkin_truncate(SpectralField f, int cutoff) {
    galerkin_truncate_inplace(f, cutoff);
    return f;
}

int dealias_cutoff(int n) {
    require_valid_resolution(n);
    return (n - 1) / 3;
}

SpectralField dealias_mask(SpectralField f) {
    galerkin_truncate_inplace(f, dealias_cutoff(f.resolution()));
    return f;
}

double inner_product(const SpectralField& a, const SpectralField& b) {
    if (a.resolution() != b.resolution()) throw ConfigError("N", "resolution mismatch in inner product");
    return simd::active().real_inner(a.data(), b.data(), a.size());
}

double inner_product(const VectorField& a, const VectorField& b) {
    return inner_product(a[0], b[0]) + inner_product(a[1], b[1]) + inner_product(a[2], b[2]);
}

double l2_norm_squared(const SpectralField& f) { return inner_product(f, f); }

double l2_norm_squared(const VectorField& v) { return inner_product(v, v); }

double divergence_residual(const VectorField& v) {
    const auto& wn = wavenumbers(v.resolution());
    double worst = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < v[0].size(); ++i) {
        const Complex c1 = v[0].data()[i], c2 = v[1].data()[i], c3 = v[2].data()[i];
        const Complex kv = wn.k[0][i] * c1 + wn.k[1][i] * c2 + wn.k[2][i] * c3;
        worst = std::max(worst, std::norm(kv));
        scale = std::max(scale, wn.k_squared[i] * (std::norm(c1) + std::norm(c2) + std::norm(c3)));
    }
    return scale > 0.0 ? std::sqrt(worst / scale) : 0.0;
}

bool all_finite(const SpectralField& f) noexcept {
    for (const Complex& z : f.coefficients())
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

}  // namespace mhdb

namespace mhdb {

double gradient_norm_squared(const SpectralField& f) {
    const auto& wn = wavenumbers(f.resolution());
    return kTwoPi * kTwoPi * simd::active().weighted_norm2(f.data(), wn.k_squared.data(), f.size());
}

double gradient_norm_squared(const VectorField& v) {
    return gradient_norm_squared(v[0]) + gradient_norm_squared(v[1]) + gradient_norm_squared(v[2]);
}

}  // namespace mhdb
