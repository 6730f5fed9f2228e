#pragma once

// Slow, direct reference computations used only by the tests. Nothing here calls
// the library's transforms or projection; fields are used as plain containers.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "mhdb/dynamics/params.hpp"
#include "mhdb/dynamics/state.hpp"

namespace oracle {

using mhdb::Complex;
using mhdb::RealGrid;
using mhdb::SpectralField;
using mhdb::State;
using mhdb::VectorField;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline int signed_k(int j, int n) { return j < n / 2 ? j : j - n; }

inline int cube_norm(int k1, int k2, int k3) { return std::max({std::abs(k1), std::abs(k2), std::abs(k3)}); }

// O(N^6) discrete Fourier transform with the 1/N^3 normalisation on the forward side.
inline SpectralField dft_forward(const RealGrid& g) {
    const int n = g.resolution();
    SpectralField out(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const int k1 = signed_k(a, n), k2 = signed_k(b, n), k3 = signed_k(c, n);
                Complex sum = 0.0;
                for (int j1 = 0; j1 < n; ++j1)
                    for (int j2 = 0; j2 < n; ++j2)
                        for (int j3 = 0; j3 < n; ++j3) {
                            const double phase = -kTwoPi * (k1 * j1 + k2 * j2 + k3 * j3) / n;
                            sum += g(j1, j2, j3) * Complex(std::cos(phase), std::sin(phase));
                        }
                out(k1, k2, k3) = sum / static_cast<double>(n * n * n);
            }
    return out;
}

// Direct synthesis sum; returns the real part.
inline RealGrid dft_inverse(const SpectralField& f) {
    const int n = f.resolution();
    RealGrid out(n);
    for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = 0; j2 < n; ++j2)
            for (int j3 = 0; j3 < n; ++j3) {
                Complex sum = 0.0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        for (int c = 0; c < n; ++c) {
                            const int k1 = signed_k(a, n), k2 = signed_k(b, n), k3 = signed_k(c, n);
                            const double phase = kTwoPi * (k1 * j1 + k2 * j2 + k3 * j3) / n;
                            sum += f(k1, k2, k3) * Complex(std::cos(phase), std::sin(phase));
                        }
                out(j1, j2, j3) = sum.real();
            }
    return out;
}

inline RealGrid sample(int n, const std::function<double(double, double, double)>& fn) {
    RealGrid g(n);
    for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = 0; j2 < n; ++j2)
            for (int j3 = 0; j3 < n; ++j3)
                g(j1, j2, j3) = fn(static_cast<double>(j1) / n, static_cast<double>(j2) / n, static_cast<double>(j3) / n);
    return g;
}

inline double max_abs_diff(const RealGrid& a, const RealGrid& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    return worst;
}

inline double max_abs_diff(const SpectralField& a, const SpectralField& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    return worst;
}

inline double max_abs(const SpectralField& a) {
    double worst = 0.0;
    for (const Complex& z : a.coefficients()) worst = std::max(worst, std::abs(z));
    return worst;
}

inline double max_abs_diff(const VectorField& a, const VectorField& b) {
    return std::max({max_abs_diff(a[0], b[0]), max_abs_diff(a[1], b[1]), max_abs_diff(a[2], b[2])});
}

inline double max_abs(const VectorField& a) { return std::max({max_abs(a[0]), max_abs(a[1]), max_abs(a[2])}); }

// Mean over grid samples, i.e. the exact integral for band-limited products.
inline double grid_mean(const RealGrid& g) {
    double s = 0.0;
    for (double v : g.values()) s += v;
    return s / static_cast<double>(g.size());
}

inline double grid_inner(const RealGrid& a, const RealGrid& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a.data()[i] * b.data()[i];
    return s / static_cast<double>(a.size());
}

// v - k (k.v) / |k|^2 mode by mode.
inline VectorField leray(const VectorField& v) {
    const int n = v.resolution();
    VectorField out = v;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const int k[3] = {signed_k(a, n), signed_k(b, n), signed_k(c, n)};
                const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
                if (k2 == 0.0) continue;
                Complex dot = 0.0;
                for (int i = 0; i < 3; ++i) dot += static_cast<double>(k[i]) * v[i](k[0], k[1], k[2]);
                for (int i = 0; i < 3; ++i) out[i](k[0], k[1], k[2]) -= static_cast<double>(k[i]) * dot / k2;
            }
    return out;
}

struct Mode {
    int k[3];
};

inline std::vector<Mode> band_modes(int m) {
    std::vector<Mode> out;
    for (int a = -m; a <= m; ++a)
        for (int b = -m; b <= m; ++b)
            for (int c = -m; c <= m; ++c) out.push_back({{a, b, c}});
    return out;
}

inline int dealias_band(int n) {
    int m = 0;
    while (3 * (m + 1) < n) ++m;
    return m;
}

// (u.grad) f for a scalar f by the convolution sum over p + q = k with p, q in the
// dealiasing band, truncated to |k|_inf <= cutoff.
inline SpectralField convect_scalar(const VectorField& u, const SpectralField& f, int cutoff) {
    const int n = f.resolution();
    const auto modes = band_modes(dealias_band(n));
    SpectralField out(n);
    for (const Mode& p : modes)
        for (const Mode& q : modes) {
            const int k1 = p.k[0] + q.k[0], k2 = p.k[1] + q.k[1], k3 = p.k[2] + q.k[2];
            if (cube_norm(k1, k2, k3) > cutoff) continue;
            const Complex fq = f(q.k[0], q.k[1], q.k[2]);
            Complex s = 0.0;
            for (int j = 0; j < 3; ++j) s += u[j](p.k[0], p.k[1], p.k[2]) * Complex(0.0, kTwoPi * q.k[j]);
            out(k1, k2, k3) += s * fq;
        }
    return out;
}

inline VectorField convect(const VectorField& u, const VectorField& v, int cutoff) {
    VectorField out(u.resolution());
    for (int i = 0; i < 3; ++i) out[i] = convect_scalar(u, v[i], cutoff);
    return out;
}

// Tendencies of the truncated system from the convolution sums.
struct Tendency {
    VectorField du, db;
    SpectralField dtheta;
};

inline Tendency tendency(const State& s, const mhdb::Params& p) {
    const int m = p.cutoff;
    VectorField du = convect(s.b, s.b, m);
    du -= convect(s.u, s.u, m);
    for (int a = -m; a <= m; ++a)
        for (int b = -m; b <= m; ++b)
            for (int c = -m; c <= m; ++c) du[2](a, b, c) += p.g * s.theta(a, b, c);
    VectorField db = convect(s.b, s.u, m);
    db -= convect(s.u, s.b, m);
    SpectralField dth = convect_scalar(s.u, s.theta, m);
    dth *= -1.0;
    return {leray(du), leray(db), dth};
}

// Sum of Re(conj(a) b) over all modes.
inline double inner(const SpectralField& a, const SpectralField& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (std::conj(a.data()[i]) * b.data()[i]).real();
    return s;
}

inline double inner(const VectorField& a, const VectorField& b) {
    return inner(a[0], b[0]) + inner(a[1], b[1]) + inner(a[2], b[2]);
}

// sum 4 pi^2 |k|^2 |f|^2
inline double grad_norm2(const SpectralField& f) {
    const int n = f.resolution();
    double s = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const int k1 = signed_k(a, n), k2 = signed_k(b, n), k3 = signed_k(c, n);
                s += 4.0 * kPi * kPi * (k1 * k1 + k2 * k2 + k3 * k3) * std::norm(f(k1, k2, k3));
            }
    return s;
}

inline double grad_norm2(const VectorField& v) { return grad_norm2(v[0]) + grad_norm2(v[1]) + grad_norm2(v[2]); }

}  // namespace oracle
