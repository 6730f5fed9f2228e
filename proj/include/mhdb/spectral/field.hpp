#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "mhdb/simd/aligned.hpp"

namespace mhdb {

/// Signed wavenumber stored at FFT-ordered index j of an n-point axis, in [-n/2, n/2).
constexpr int wavenumber(int j, int n) noexcept { return j < n / 2 ? j : j - n; }

/// Inverse of wavenumber(): FFT-ordered index holding signed wavenumber k.
constexpr int index_of(int k, int n) noexcept { return k >= 0 ? k : k + n; }

/// Index holding -k; the Nyquist index n/2 maps onto itself.
constexpr int mirror_index(int j, int n) noexcept { return j == 0 ? 0 : n - j; }

/// Throws ConfigError unless n is a positive even integer.
void require_valid_resolution(int n);

/// Fourier coefficients of one real scalar on the unit torus, basis exp(2 pi i k.x).
///
/// Coefficients are stored row-major over (k1, k2, k3) with each axis in FFT
/// order: index j holds wavenumber(j, n), so k runs 0..n/2-1 then -n/2..-1.
/// The coefficient at k = 0 is the mean of the field.
class SpectralField {
public:
    SpectralField() = default;
    explicit SpectralField(int n);

    int resolution() const noexcept { return n_; }
    std::size_t size() const noexcept { return c_.size(); }

    std::size_t index(int k1, int k2, int k3) const noexcept {
        return (static_cast<std::size_t>(index_of(k1, n_)) * n_ + index_of(k2, n_)) * n_ +
               index_of(k3, n_);
    }
    Complex& operator()(int k1, int k2, int k3) noexcept { return c_[index(k1, k2, k3)]; }
    const Complex& operator()(int k1, int k2, int k3) const noexcept { return c_[index(k1, k2, k3)]; }

    Complex* data() noexcept { return c_.data(); }
    const Complex* data() const noexcept { return c_.data(); }
    std::span<Complex> coefficients() noexcept { return c_; }
    std::span<const Complex> coefficients() const noexcept { return c_; }

    void set_zero() noexcept;

    SpectralField& operator+=(const SpectralField& other);
    SpectralField& operator-=(const SpectralField& other);
    SpectralField& operator*=(double s) noexcept;

    /// Bitwise equality of resolution and coefficients.
    friend bool operator==(const SpectralField& a, const SpectralField& b) noexcept;

private:
    int n_ = 0;
    AlignedVector<Complex> c_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double s, SpectralField a);

/// Three components sharing one resolution.
struct VectorField {
    std::array<SpectralField, 3> c;

    VectorField() = default;
    explicit VectorField(int n) : c{SpectralField(n), SpectralField(n), SpectralField(n)} {}

    int resolution() const noexcept { return c[0].resolution(); }
    SpectralField& operator[](int i) noexcept { return c[static_cast<std::size_t>(i)]; }
    const SpectralField& operator[](int i) const noexcept { return c[static_cast<std::size_t>(i)]; }

    void set_zero() noexcept;

    VectorField& operator+=(const VectorField& other);
    VectorField& operator-=(const VectorField& other);
    VectorField& operator*=(double s) noexcept;

    friend bool operator==(const VectorField& a, const VectorField& b) noexcept = default;
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(double s, VectorField a);

/// Real samples at x_j = j/n, row-major over (j1, j2, j3).
class RealGrid {
public:
    RealGrid() = default;
    explicit RealGrid(int n);

    int resolution() const noexcept { return n_; }
    std::size_t size() const noexcept { return v_.size(); }

    double& operator()(int j1, int j2, int j3) noexcept {
        return v_[(static_cast<std::size_t>(j1) * n_ + j2) * n_ + j3];
    }
    double operator()(int j1, int j2, int j3) const noexcept {
        return v_[(static_cast<std::size_t>(j1) * n_ + j2) * n_ + j3];
    }

    double* data() noexcept { return v_.data(); }
    const double* data() const noexcept { return v_.data(); }
    std::span<double> values() noexcept { return v_; }
    std::span<const double> values() const noexcept { return v_; }

private:
    int n_ = 0;
    AlignedVector<double> v_;
};

/// Per-resolution wavevector tables flattened in SpectralField order.
struct WavenumberTable {
    int n = 0;
    std::array<AlignedVector<double>, 3> k;  ///< integer components k1, k2, k3
    AlignedVector<double> k_squared;         ///< |k|^2 on the integer lattice
    AlignedVector<double> inv_k_squared;     ///< 1/|k|^2, zero at k = 0
    AlignedVector<int> cube_norm;            ///< max_i |k_i|
};

/// Cached tables for resolution n; safe to call from several threads.
const WavenumberTable& wavenumbers(int n);

}  // namespace mhdb
