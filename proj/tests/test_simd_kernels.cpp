#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "mhdb/simd/kernels.hpp"

using namespace mhdb;
using simd::KernelTable;

namespace {

const std::vector<std::size_t> kLengths{0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 1000, 1003};

struct Data {
    AlignedVector<double> a, b, c, d, w, k1, k2, k3, inv;
    AlignedVector<Complex> x, y, z;

    explicit Data(std::size_t n, unsigned seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        for (auto* v : {&a, &b, &c, &d}) {
            v->resize(n);
            for (double& e : *v) e = u(rng);
        }
        w.resize(n);
        for (double& e : w) e = std::abs(u(rng));
        for (auto* v : {&x, &y, &z}) {
            v->resize(n);
            for (Complex& e : *v) e = {u(rng), u(rng)};
        }
        k1.resize(n);
        k2.resize(n);
        k3.resize(n);
        inv.resize(n);
        std::uniform_int_distribution<int> ki(-5, 5);
        for (std::size_t i = 0; i < n; ++i) {
            k1[i] = ki(rng);
            k2[i] = ki(rng);
            k3[i] = ki(rng);
            const double q = k1[i] * k1[i] + k2[i] * k2[i] + k3[i] * k3[i];
            inv[i] = q > 0 ? 1.0 / q : 0.0;
        }
    }
};

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double max_diff(const AlignedVector<double>& a, const AlignedVector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double max_diff(const AlignedVector<Complex>& a, const AlignedVector<Complex>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Elementwise kernels may differ from the reference by one fused rounding.
constexpr double kElementTol = 1e-15 * 16;
constexpr double kReduceTol = 1e-13;

void compare(const KernelTable& ref, const KernelTable& vec) {
    for (std::size_t n : kLengths) {
        CAPTURE(n);
        Data in(n, static_cast<unsigned>(n) + 7);

        AlignedVector<double> r1(n), r2(n);
        ref.multiply(in.a.data(), in.b.data(), r1.data(), n);
        vec.multiply(in.a.data(), in.b.data(), r2.data(), n);
        CHECK(max_diff(r1, r2) == 0.0);

        ref.multiply_sub(in.a.data(), in.b.data(), in.c.data(), in.d.data(), r1.data(), n);
        vec.multiply_sub(in.a.data(), in.b.data(), in.c.data(), in.d.data(), r2.data(), n);
        CHECK(max_diff(r1, r2) <= kElementTol);

        CHECK(rel(vec.dot(in.a.data(), in.b.data(), n), ref.dot(in.a.data(), in.b.data(), n)) <= kReduceTol);
        CHECK(vec.max_abs(in.a.data(), n) == ref.max_abs(in.a.data(), n));

        const double* av[3] = {in.a.data(), in.b.data(), in.c.data()};
        const double* bv[3] = {in.d.data(), in.w.data(), in.a.data()};
        CHECK(rel(vec.max_speed_sum(av, bv, n), ref.max_speed_sum(av, bv, n)) <= kElementTol);

        AlignedVector<Complex> z1 = in.x, z2 = in.x;
        ref.scale_complex(z1.data(), in.w.data(), n);
        vec.scale_complex(z2.data(), in.w.data(), n);
        CHECK(max_diff(z1, z2) == 0.0);

        z1 = in.y;
        z2 = in.y;
        ref.axpy_complex(0.37, in.x.data(), z1.data(), n);
        vec.axpy_complex(0.37, in.x.data(), z2.data(), n);
        CHECK(max_diff(z1, z2) <= kElementTol);

        ref.scaled_axpy_complex(in.w.data(), in.x.data(), -1.3, in.y.data(), z1.data(), n);
        vec.scaled_axpy_complex(in.w.data(), in.x.data(), -1.3, in.y.data(), z2.data(), n);
        CHECK(max_diff(z1, z2) <= kElementTol);

        CHECK(rel(vec.weighted_norm2(in.x.data(), in.w.data(), n), ref.weighted_norm2(in.x.data(), in.w.data(), n)) <=
              kReduceTol);
        CHECK(rel(vec.real_inner(in.x.data(), in.y.data(), n), ref.real_inner(in.x.data(), in.y.data(), n)) <= kReduceTol);

        AlignedVector<Complex> a1 = in.x, b1 = in.y, c1 = in.z;
        AlignedVector<Complex> a2 = in.x, b2 = in.y, c2 = in.z;
        ref.leray(in.k1.data(), in.k2.data(), in.k3.data(), in.inv.data(), a1.data(), b1.data(), c1.data(), n);
        vec.leray(in.k1.data(), in.k2.data(), in.k3.data(), in.inv.data(), a2.data(), b2.data(), c2.data(), n);
        CHECK(max_diff(a1, a2) <= 1e-14);
        CHECK(max_diff(b1, b2) <= 1e-14);
        CHECK(max_diff(c1, c2) <= 1e-14);
    }
}

}  // namespace

TEST_CASE("scalar kernels compute their definitions") {
    const KernelTable& k = simd::scalar_kernels();
    Data in(9, 3);
    AlignedVector<double> out(9);
    k.multiply_sub(in.a.data(), in.b.data(), in.c.data(), in.d.data(), out.data(), 9);
    for (std::size_t i = 0; i < 9; ++i) CHECK(out[i] == doctest::Approx(in.a[i] * in.b[i] - in.c[i] * in.d[i]));

    double dot = 0.0, wn = 0.0, ri = 0.0, mx = 0.0;
    for (std::size_t i = 0; i < 9; ++i) {
        dot += in.a[i] * in.b[i];
        wn += in.w[i] * std::norm(in.x[i]);
        ri += (std::conj(in.x[i]) * in.y[i]).real();
        mx = std::max(mx, std::abs(in.a[i]));
    }
    CHECK(k.dot(in.a.data(), in.b.data(), 9) == doctest::Approx(dot));
    CHECK(k.weighted_norm2(in.x.data(), in.w.data(), 9) == doctest::Approx(wn));
    CHECK(k.real_inner(in.x.data(), in.y.data(), 9) == doctest::Approx(ri));
    CHECK(k.max_abs(in.a.data(), 9) == mx);

    // The projected vector is orthogonal to k.
    AlignedVector<Complex> a = in.x, b = in.y, c = in.z;
    k.leray(in.k1.data(), in.k2.data(), in.k3.data(), in.inv.data(), a.data(), b.data(), c.data(), 9);
    for (std::size_t i = 0; i < 9; ++i) {
        const Complex kv = in.k1[i] * a[i] + in.k2[i] * b[i] + in.k3[i] * c[i];
        CHECK(std::abs(kv) <= 1e-13);
    }
}

TEST_CASE("vector kernels agree with the scalar reference") {
    const KernelTable* avx2 = simd::kernels_for(simd::Isa::avx2);
    if (avx2 == nullptr) {
        MESSAGE("AVX2 kernels unavailable on this machine; nothing to compare");
        return;
    }
    CHECK(avx2->isa == simd::Isa::avx2);
    compare(simd::scalar_kernels(), *avx2);
}

TEST_CASE("the active table is one of the known tables") {
    const KernelTable& a = simd::active();
    CHECK((&a == &simd::scalar_kernels() || &a == simd::kernels_for(simd::Isa::avx2)));
    CHECK(simd::kernels_for(simd::Isa::scalar) == &simd::scalar_kernels());
}
