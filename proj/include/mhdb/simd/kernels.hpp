#pragma once

// Data-parallel inner loops of the solver. Every kernel has a scalar
// reference implementation; an AVX2/FMA variant is compiled on x86-64 and
// picked at runtime when the CPU supports it. Set MHDB_SIMD=scalar in the
// environment to force the reference path.

#include <cstddef>
#include <span>
#include <string_view>

#include "mhdb/simd/aligned.hpp"

namespace mhdb::simd {

enum class Isa { scalar, avx2 };

struct KernelTable {
    Isa isa;
    std::string_view name;

    /// out[i] = a[i]*b[i]
    void (*multiply)(const double* a, const double* b, double* out, std::size_t n);
    /// out[i] = a[i]*b[i] - c[i]*d[i]
    void (*multiply_sub)(const double* a, const double* b, const double* c, const double* d,
                         double* out, std::size_t n);
    /// sum of a[i]*b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);
    /// max |a[i]|
    double (*max_abs)(const double* a, std::size_t n);
    /// out[i] = sqrt(a0^2+a1^2+a2^2) + sqrt(b0^2+b1^2+b2^2), reduced to the maximum
    double (*max_speed_sum)(const double* const a[3], const double* const b[3], std::size_t n);

    /// f[i] *= m[i] on complex coefficients with real multipliers
    void (*scale_complex)(Complex* f, const double* m, std::size_t n);
    /// y[i] += alpha * x[i]
    void (*axpy_complex)(double alpha, const Complex* x, Complex* y, std::size_t n);
    /// out[i] = m[i] * (x[i] + alpha*y[i])
    void (*scaled_axpy_complex)(const double* m, const Complex* x, double alpha, const Complex* y,
                                Complex* out, std::size_t n);
    /// sum of w[i]*|f[i]|^2
    double (*weighted_norm2)(const Complex* f, const double* w, std::size_t n);
    /// sum of Re(conj(a[i]) * b[i])
    double (*real_inner)(const Complex* a, const Complex* b, std::size_t n);
    /// Removes the component of (c1,c2,c3)[i] along (k1,k2,k3)[i]; inv_k2[i] must be 0 where k=0.
    void (*leray)(const double* k1, const double* k2, const double* k3, const double* inv_k2,
                  Complex* c1, Complex* c2, Complex* c3, std::size_t n);
};

/// Reference implementation, always available.
const KernelTable& scalar_kernels();

/// Vectorized table for the given ISA, or nullptr if not compiled in or unsupported by this CPU.
const KernelTable* kernels_for(Isa isa);

/// Table chosen once per process: the widest supported ISA unless MHDB_SIMD=scalar.
const KernelTable& active();

}  // namespace mhdb::simd
