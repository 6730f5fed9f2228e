#include <algorithm>
#include <cmath>

#include "mhdb/simd/kernels.hpp"

namespace mhdb::simd {
namespace {

void multiply(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void multiply_sub(const double* a, const double* b, const double* c, const double* d, double* out,
                  std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i] - c[i] * d[i];
}

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double max_abs(const double* a, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i]));
    return m;
}

double max_speed_sum(const double* const a[3], const double* const b[3], std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double sa = std::sqrt(a[0][i] * a[0][i] + a[1][i] * a[1][i] + a[2][i] * a[2][i]);
        const double sb = std::sqrt(b[0][i] * b[0][i] + b[1][i] * b[1][i] + b[2][i] * b[2][i]);
        m = std::max(m, sa + sb);
    }
    return m;
}

void scale_complex(Complex* f, const double* m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) f[i] *= m[i];
}

void axpy_complex(double alpha, const Complex* x, Complex* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scaled_axpy_complex(const double* m, const Complex* x, double alpha, const Complex* y,
                         Complex* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = m[i] * (x[i] + alpha * y[i]);
}

double weighted_norm2(const Complex* f, const double* w, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += w[i] * std::norm(f[i]);
    return s;
}

double real_inner(const Complex* a, const Complex* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    return s;
}

void leray(const double* k1, const double* k2, const double* k3, const double* inv_k2, Complex* c1,
           Complex* c2, Complex* c3, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const Complex s = (k1[i] * c1[i] + k2[i] * c2[i] + k3[i] * c3[i]) * inv_k2[i];
        c1[i] -= k1[i] * s;
        c2[i] -= k2[i] * s;
        c3[i] -= k3[i] * s;
    }
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{
        Isa::scalar,    "scalar",     multiply,           multiply_sub,   dot,
        max_abs,        max_speed_sum, scale_complex,     axpy_complex,   scaled_axpy_complex,
        weighted_norm2, real_inner,   leray,
    };
    return table;
}

}  // namespace mhdb::simd
