#pragma once

#include <array>

#include "mhdb/spectral/field.hpp"

namespace mhdb {

/// Galerkin unknown: velocity, magnetic field, temperature and the clock.
struct State {
    VectorField u;
    VectorField b;
    SpectralField theta;
    double t = 0.0;

    State() = default;
    explicit State(int n) : u(n), b(n), theta(n) {}

    int resolution() const noexcept { return theta.resolution(); }

    /// u1 u2 u3 b1 b2 b3 theta, the persisted field order.
    std::array<SpectralField*, 7> fields() noexcept;
    std::array<const SpectralField*, 7> fields() const noexcept;

    friend bool operator==(const State&, const State&) = default;
};

/// Time derivatives of (u, b, theta) without the linear diffusion terms.
struct Tendency {
    VectorField du;
    VectorField db;
    SpectralField dtheta;

    Tendency() = default;
    explicit Tendency(int n) : du(n), db(n), dtheta(n) {}

    std::array<SpectralField*, 7> fields() noexcept;
    std::array<const SpectralField*, 7> fields() const noexcept;
};

/// Copy of `state` re-gridded to resolution n: shared modes are copied, others zero.
/// Modes that do not fit the target grid are dropped.
State resample(const State& state, int n);

}  // namespace mhdb
