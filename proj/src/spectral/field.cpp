#include "mhdb/spectral/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>

#include "mhdb/errors.hpp"
#include "mhdb/simd/kernels.hpp"

namespace mhdb {

void require_valid_resolution(int n) {
    if (n <= 0 || n % 2 != 0)
        throw ConfigError("N", "resolution must be a positive even integer, got " + std::to_string(n));
}

namespace {

std::size_t cube(int n) { return static_cast<std::size_t>(n) * n * n; }

void require_same(int a, int b) {
    if (a != b) throw ConfigError("N", "resolution mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

SpectralField::SpectralField(int n) : n_(n) {
    require_valid_resolution(n);
    c_.assign(cube(n), Complex{});
}

void SpectralField::set_zero() noexcept { std::fill(c_.begin(), c_.end(), Complex{}); }

SpectralField& SpectralField::operator+=(const SpectralField& other) {
    require_same(n_, other.n_);
    simd::active().axpy_complex(1.0, other.data(), data(), size());
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
    require_same(n_, other.n_);
    simd::active().axpy_complex(-1.0, other.data(), data(), size());
    return *this;
}

SpectralField& SpectralField::operator*=(double s) noexcept {
    for (auto& z : c_) z *= s;
    return *this;
}

bool operator==(const SpectralField& a, const SpectralField& b) noexcept {
    return a.n_ == b.n_ && (a.c_.empty() || std::memcmp(a.c_.data(), b.c_.data(), a.c_.size() * sizeof(Complex)) == 0);
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double s, SpectralField a) { return a *= s; }

void VectorField::set_zero() noexcept {
    for (auto& f : c) f.set_zero();
}

VectorField& VectorField::operator+=(const VectorField& other) {
    for (int i = 0; i < 3; ++i) c[i] += other.c[i];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
    for (int i = 0; i < 3; ++i) c[i] -= other.c[i];
    return *this;
}

VectorField& VectorField::operator*=(double s) noexcept {
    for (auto& f : c) f *= s;
    return *this;
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(double s, VectorField a) { return a *= s; }

RealGrid::RealGrid(int n) : n_(n) {
    require_valid_resolution(n);
    v_.assign(cube(n), 0.0);
}

const WavenumberTable& wavenumbers(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<WavenumberTable>> cache;

    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (slot) return *slot;

    require_valid_resolution(n);
    auto table = std::make_unique<WavenumberTable>();
    table->n = n;
    const std::size_t total = cube(n);
    for (auto& k : table->k) k.resize(total);
    table->k_squared.resize(total);
    table->inv_k_squared.resize(total);
    table->cube_norm.resize(total);

    std::size_t idx = 0;
    for (int j1 = 0; j1 < n; ++j1) {
        const int k1 = wavenumber(j1, n);
        for (int j2 = 0; j2 < n; ++j2) {
            const int k2 = wavenumber(j2, n);
            for (int j3 = 0; j3 < n; ++j3, ++idx) {
                const int k3 = wavenumber(j3, n);
                table->k[0][idx] = k1;
                table->k[1][idx] = k2;
                table->k[2][idx] = k3;
                const double k2sum = static_cast<double>(k1 * k1 + k2 * k2 + k3 * k3);
                table->k_squared[idx] = k2sum;
                table->inv_k_squared[idx] = k2sum > 0.0 ? 1.0 / k2sum : 0.0;
                table->cube_norm[idx] = std::max({std::abs(k1), std::abs(k2), std::abs(k3)});
            }
        }
    }
    slot = std::move(table);
    return *slot;
}

}  // namespace mhdb
