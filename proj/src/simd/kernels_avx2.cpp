// AVX2/FMA variants of the kernels in kernels_scalar.cpp. Reductions keep
// four lane accumulators and fold them in a fixed order, so results are
// deterministic but may differ from the scalar path in the last bits.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "mhdb/simd/kernels.hpp"

namespace mhdb::simd {
namespace {

inline double hsum(__m256d v) {
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, v);
    return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

inline double hmax(__m256d v) {
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, v);
    return std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
}

// [k0, k1] -> [k0, k0, k1, k1], matching two interleaved complex numbers.
inline __m256d dup_pairs(const double* k) {
    const __m128d pair = _mm_loadu_pd(k);
    return _mm256_permute4x64_pd(_mm256_castpd128_pd256(pair), 0b01010000);
}

void multiply(const double* a, const double* b, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void multiply_sub(const double* a, const double* b, const double* c, const double* d, double* out,
                  std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d cd = _mm256_mul_pd(_mm256_loadu_pd(c + i), _mm256_loadu_pd(d + i));
        _mm256_storeu_pd(out + i, _mm256_fmsub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), cd));
    }
    for (; i < n; ++i) out[i] = a[i] * b[i] - c[i] * d[i];
}

double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double max_abs(const double* a, std::size_t n) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    __m256d m = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) m = _mm256_max_pd(m, _mm256_andnot_pd(sign, _mm256_loadu_pd(a + i)));
    double r = hmax(m);
    for (; i < n; ++i) r = std::max(r, std::abs(a[i]));
    return r;
}

double max_speed_sum(const double* const a[3], const double* const b[3], std::size_t n) {
    __m256d m = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x = _mm256_loadu_pd(a[0] + i);
        __m256d sa = _mm256_mul_pd(x, x);
        x = _mm256_loadu_pd(a[1] + i);
        sa = _mm256_fmadd_pd(x, x, sa);
        x = _mm256_loadu_pd(a[2] + i);
        sa = _mm256_fmadd_pd(x, x, sa);
        x = _mm256_loadu_pd(b[0] + i);
        __m256d sb = _mm256_mul_pd(x, x);
        x = _mm256_loadu_pd(b[1] + i);
        sb = _mm256_fmadd_pd(x, x, sb);
        x = _mm256_loadu_pd(b[2] + i);
        sb = _mm256_fmadd_pd(x, x, sb);
        m = _mm256_max_pd(m, _mm256_add_pd(_mm256_sqrt_pd(sa), _mm256_sqrt_pd(sb)));
    }
    double r = hmax(m);
    for (; i < n; ++i) {
        const double sa = std::sqrt(a[0][i] * a[0][i] + a[1][i] * a[1][i] + a[2][i] * a[2][i]);
        const double sb = std::sqrt(b[0][i] * b[0][i] + b[1][i] * b[1][i] + b[2][i] * b[2][i]);
        r = std::max(r, sa + sb);
    }
    return r;
}

void scale_complex(Complex* f, const double* m, std::size_t n) {
    auto* p = reinterpret_cast<double*>(f);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        _mm256_storeu_pd(p + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(p + 2 * i), dup_pairs(m + i)));
    for (; i < n; ++i) f[i] *= m[i];
}

void axpy_complex(double alpha, const Complex* x, Complex* y, std::size_t n) {
    const auto* px = reinterpret_cast<const double*>(x);
    auto* py = reinterpret_cast<double*>(y);
    const __m256d a = _mm256_set1_pd(alpha);
    const std::size_t len = 2 * n;
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4)
        _mm256_storeu_pd(py + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i)));
    for (; i < len; ++i) py[i] += alpha * px[i];
}

void scaled_axpy_complex(const double* m, const Complex* x, double alpha, const Complex* y,
                         Complex* out, std::size_t n) {
    const auto* px = reinterpret_cast<const double*>(x);
    const auto* py = reinterpret_cast<const double*>(y);
    auto* po = reinterpret_cast<double*>(out);
    const __m256d a = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d s = _mm256_fmadd_pd(a, _mm256_loadu_pd(py + 2 * i), _mm256_loadu_pd(px + 2 * i));
        _mm256_storeu_pd(po + 2 * i, _mm256_mul_pd(dup_pairs(m + i), s));
    }
    for (; i < n; ++i) out[i] = m[i] * (x[i] + alpha * y[i]);
}

double weighted_norm2(const Complex* f, const double* w, std::size_t n) {
    const auto* p = reinterpret_cast<const double*>(f);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = _mm256_loadu_pd(p + 2 * i);
        acc = _mm256_fmadd_pd(dup_pairs(w + i), _mm256_mul_pd(v, v), acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += w[i] * std::norm(f[i]);
    return s;
}

double real_inner(const Complex* a, const Complex* b, std::size_t n) {
    return dot(reinterpret_cast<const double*>(a), reinterpret_cast<const double*>(b), 2 * n);
}

void leray(const double* k1, const double* k2, const double* k3, const double* inv_k2, Complex* c1,
           Complex* c2, Complex* c3, std::size_t n) {
    auto* p1 = reinterpret_cast<double*>(c1);
    auto* p2 = reinterpret_cast<double*>(c2);
    auto* p3 = reinterpret_cast<double*>(c3);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d a = dup_pairs(k1 + i);
        const __m256d b = dup_pairs(k2 + i);
        const __m256d c = dup_pairs(k3 + i);
        const __m256d v1 = _mm256_loadu_pd(p1 + 2 * i);
        const __m256d v2 = _mm256_loadu_pd(p2 + 2 * i);
        const __m256d v3 = _mm256_loadu_pd(p3 + 2 * i);
        __m256d s = _mm256_mul_pd(a, v1);
        s = _mm256_fmadd_pd(b, v2, s);
        s = _mm256_fmadd_pd(c, v3, s);
        s = _mm256_mul_pd(s, dup_pairs(inv_k2 + i));
        _mm256_storeu_pd(p1 + 2 * i, _mm256_fnmadd_pd(a, s, v1));
        _mm256_storeu_pd(p2 + 2 * i, _mm256_fnmadd_pd(b, s, v2));
        _mm256_storeu_pd(p3 + 2 * i, _mm256_fnmadd_pd(c, s, v3));
    }
    for (; i < n; ++i) {
        const Complex s = (k1[i] * c1[i] + k2[i] * c2[i] + k3[i] * c3[i]) * inv_k2[i];
        c1[i] -= k1[i] * s;
        c2[i] -= k2[i] * s;
        c3[i] -= k3[i] * s;
    }
}

}  // namespace

const KernelTable& avx2_kernels() {
    static const KernelTable table{
        Isa::avx2,      "avx2",        multiply,      multiply_sub, dot,
        max_abs,        max_speed_sum, scale_complex, axpy_complex, scaled_axpy_complex,
        weighted_norm2, real_inner,    leray,
    };
    return table;
}

}  // namespace mhdb::simd
