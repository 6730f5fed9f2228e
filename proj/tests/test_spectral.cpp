#include <doctest.h>

#include <cmath>
#include <random>

#include "mhdb/errors.hpp"
#include "mhdb/experiments/initial_condition.hpp"
#include "mhdb/spectral/calculus.hpp"
#include "mhdb/spectral/field.hpp"
#include "mhdb/spectral/transform.hpp"
#include "oracles.hpp"

using namespace mhdb;
using oracle::kTwoPi;

namespace {

RealGrid random_grid(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> d;
    RealGrid g(n);
    for (double& v : g.values()) v = d(rng);
    return g;
}

VectorField random_vector(int n, unsigned seed) {
    VectorField v(n);
    for (int i = 0; i < 3; ++i) v[i] = forward_transform(random_grid(n, seed + static_cast<unsigned>(i)));
    return v;
}

}  // namespace

TEST_CASE("wavenumber and index helpers are inverse") {
    for (int n : {4, 6, 8, 16}) {
        for (int j = 0; j < n; ++j) {
            const int k = wavenumber(j, n);
            CHECK(k >= -n / 2);
            CHECK(k < n / 2);
            CHECK(index_of(k, n) == j);
            CHECK(wavenumber(mirror_index(j, n), n) == (k == -n / 2 ? k : -k));
        }
    }
}

TEST_CASE("resolutions must be positive and even") {
    CHECK_THROWS_AS(require_valid_resolution(0), ConfigError);
    CHECK_THROWS_AS(require_valid_resolution(7), ConfigError);
    CHECK_THROWS_AS(require_valid_resolution(-4), ConfigError);
    CHECK_NOTHROW(require_valid_resolution(6));
    CHECK_THROWS_AS(SpectralField(5), ConfigError);
}

TEST_CASE("forward transform matches the direct DFT sum") {
    for (int n : {4, 6, 8}) {
        const RealGrid g = random_grid(n, 11u + static_cast<unsigned>(n));
        const SpectralField fast = forward_transform(g);
        const SpectralField slow = oracle::dft_forward(g);
        CHECK(oracle::max_abs_diff(fast, slow) <= 1e-14);
    }
}

TEST_CASE("inverse transform matches direct synthesis and round-trips") {
    const int n = 8;
    const RealGrid g = random_grid(n, 5);
    const SpectralField f = forward_transform(g);
    CHECK(oracle::max_abs_diff(inverse_transform(f), oracle::dft_inverse(f)) <= 1e-13);
    CHECK(oracle::max_abs_diff(inverse_transform(f), g) <= 1e-14);
}

TEST_CASE("sin(2 pi x1) has coefficients -i/2 and i/2 at k = (+-1, 0, 0)") {
    const int n = 8;
    const SpectralField f = forward_transform(oracle::sample(n, [](double x, double, double) { return std::sin(kTwoPi * x); }));
    CHECK(std::abs(f(1, 0, 0) - Complex(0.0, -0.5)) <= 1e-15);
    CHECK(std::abs(f(-1, 0, 0) - Complex(0.0, 0.5)) <= 1e-15);
    SpectralField rest = f;
    rest(1, 0, 0) = rest(-1, 0, 0) = 0.0;
    CHECK(oracle::max_abs(rest) <= 1e-15);
}

TEST_CASE("non-Hermitian coefficients are rejected on the way to the grid") {
    SpectralField f(8);
    f(1, 2, 3) = Complex(1.0, 0.0);
    CHECK(hermitian_defect(f) == doctest::Approx(1.0));
    CHECK_THROWS_AS(inverse_transform(f), DataCorruptionError);
    f(-1, -2, -3) = Complex(1.0, 0.0);
    CHECK(hermitian_defect(f) == 0.0);
    CHECK_NOTHROW(inverse_transform(f));
}

TEST_CASE("derivatives match analytic derivatives on the grid") {
    const int n = 12;
    auto fn = [](double x, double y, double z) { return std::sin(kTwoPi * x) * std::cos(2 * kTwoPi * y) * std::sin(kTwoPi * z); };
    const SpectralField f = forward_transform(oracle::sample(n, fn));

    const RealGrid dx = oracle::sample(n, [](double x, double y, double z) {
        return kTwoPi * std::cos(kTwoPi * x) * std::cos(2 * kTwoPi * y) * std::sin(kTwoPi * z);
    });
    const RealGrid dy = oracle::sample(n, [](double x, double y, double z) {
        return -2 * kTwoPi * std::sin(kTwoPi * x) * std::sin(2 * kTwoPi * y) * std::sin(kTwoPi * z);
    });
    const RealGrid dxz = oracle::sample(n, [](double x, double y, double z) {
        return kTwoPi * kTwoPi * std::cos(kTwoPi * x) * std::cos(2 * kTwoPi * y) * std::cos(kTwoPi * z);
    });
    const RealGrid lap = oracle::sample(n, [&](double x, double y, double z) { return -6.0 * kTwoPi * kTwoPi * fn(x, y, z); });
    const RealGrid lap_h = oracle::sample(n, [&](double x, double y, double z) { return -5.0 * kTwoPi * kTwoPi * fn(x, y, z); });

    CHECK(oracle::max_abs_diff(inverse_transform(partial(f, 0)), dx) <= 1e-12);
    CHECK(oracle::max_abs_diff(inverse_transform(partial(f, 1)), dy) <= 1e-12);
    CHECK(oracle::max_abs_diff(inverse_transform(second_partial(f, 0, 2)), dxz) <= 1e-11);
    CHECK(oracle::max_abs_diff(inverse_transform(laplacian(f)), lap) <= 1e-10);
    CHECK(oracle::max_abs_diff(inverse_transform(horizontal_laplacian(f)), lap_h) <= 1e-10);

    const VectorField g = gradient(f);
    CHECK(oracle::max_abs_diff(g[0], partial(f, 0)) == 0.0);
    CHECK(oracle::max_abs_diff(inverse_transform(divergence(g)), lap) <= 1e-10);
}

TEST_CASE("Leray projection matches the mode-by-mode formula") {
    const VectorField v = random_vector(8, 21);
    const VectorField p = leray_project(v);
    CHECK(oracle::max_abs_diff(p, oracle::leray(v)) <= 1e-15);
    CHECK(divergence_residual(p) <= 1e-15);
    CHECK(divergence_residual(v) > 0.1);
    // Idempotent, and the mean flow is untouched.
    CHECK(oracle::max_abs_diff(leray_project(p), p) <= 1e-15);
    for (int i = 0; i < 3; ++i) CHECK(p[i](0, 0, 0) == v[i](0, 0, 0));
}

TEST_CASE("Leray projection annihilates gradients and keeps solenoidal fields") {
    const int n = 8;
    const SpectralField phi = forward_transform(random_grid(n, 3));
    const VectorField grad = gradient(phi);
    CHECK(oracle::max_abs(leray_project(grad)) <= 1e-13 * oracle::max_abs(grad));

    const VectorField sol = random_solenoidal_field(n, 2, 1.0, 9);
    CHECK(oracle::max_abs_diff(leray_project(sol), sol) <= 1e-16);
}

TEST_CASE("Galerkin truncation zeros the outside of the cube") {
    const int n = 8;
    SpectralField f = forward_transform(random_grid(n, 8));
    const SpectralField t = galerkin_truncate(f, 2);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const int k1 = wavenumber(a, n), k2 = wavenumber(b, n), k3 = wavenumber(c, n);
                if (oracle::cube_norm(k1, k2, k3) > 2) CHECK(t(k1, k2, k3) == Complex{});
                else CHECK(t(k1, k2, k3) == f(k1, k2, k3));
            }
    CHECK_THROWS_AS(galerkin_truncate(f, 4), ConfigError);
    CHECK_THROWS_AS(galerkin_truncate(f, -1), ConfigError);
    CHECK(galerkin_truncate(t, 3) == t);
}

TEST_CASE("dealiasing cutoff is the largest M with 3M < N") {
    for (int n = 4; n <= 128; n += 2) {
        CAPTURE(n);
        CHECK(dealias_cutoff(n) == oracle::dealias_band(n));
    }
    CHECK(dealias_cutoff(16) == 5);
    CHECK(dealias_cutoff(32) == 10);
    CHECK(dealias_cutoff(12) == 3);
    const SpectralField f = forward_transform(random_grid(8, 4));
    CHECK(dealias_mask(f) == galerkin_truncate(f, 2));
}

TEST_CASE("Parseval: L2 norms and inner products equal grid averages") {
    const int n = 8;
    const RealGrid a = random_grid(n, 1), b = random_grid(n, 2);
    const SpectralField fa = forward_transform(a), fb = forward_transform(b);
    CHECK(inner_product(fa, fb) == doctest::Approx(oracle::grid_inner(a, b)).epsilon(1e-13));
    CHECK(l2_norm_squared(fa) == doctest::Approx(oracle::grid_inner(a, a)).epsilon(1e-13));
}

TEST_CASE("gradient norm equals the grid integral of |grad f|^2") {
    const int n = 12;
    auto fn = [](double x, double y, double z) { return std::cos(kTwoPi * x) * std::sin(kTwoPi * (y + 2 * z)); };
    const SpectralField f = forward_transform(oracle::sample(n, fn));
    // |grad f|^2 averages to (2 pi)^2 (1 + 1 + 4) / 4 for this product of unit waves.
    CHECK(gradient_norm_squared(f) == doctest::Approx(kTwoPi * kTwoPi * 6.0 / 4.0).epsilon(1e-13));
    CHECK(gradient_norm_squared(f) == doctest::Approx(oracle::grad_norm2(f)).epsilon(1e-13));
}

TEST_CASE("field arithmetic and equality") {
    SpectralField a = forward_transform(random_grid(4, 1));
    SpectralField b = forward_transform(random_grid(4, 2));
    const SpectralField c = a + b;
    CHECK(oracle::max_abs_diff(c - b, a) <= 1e-15);
    CHECK(oracle::max_abs_diff(2.0 * a, a + a) == 0.0);
    CHECK(a == a);
    CHECK_FALSE(a == b);
    CHECK_THROWS_AS(a += SpectralField(6), ConfigError);
    CHECK(all_finite(a));
    a(1, 1, 1) = Complex(std::nan(""), 0.0);
    CHECK_FALSE(all_finite(a));
}

TEST_CASE("divergence residual is zero for a zero field") {
    CHECK(divergence_residual(VectorField(4)) == 0.0);
}
