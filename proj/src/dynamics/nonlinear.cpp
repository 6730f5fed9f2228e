#include "mhdb/dynamics/nonlinear.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "mhdb/errors.hpp"
#include "mhdb/simd/kernels.hpp"
#include "mhdb/spectral/calculus.hpp"
#include "mhdb/spectral/transform.hpp"

// All quadratic terms are evaluated in flux form, (u.grad) v_k = d_j (u_j v_k),
// which holds exactly for the divergence-free u of the truncated system. With
// both factors inside the dealiasing band the grid products are exact
// trigonometric polynomials, so the forward transform returns the exact
// convolution and the final truncation realises P_M.

namespace mhdb {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Workspace {
    int n = 0;
    std::array<RealGrid, 3> a;
    std::array<RealGrid, 3> b;
    RealGrid scalar;
    RealGrid product;
    SpectralField masked;
    SpectralField spec;

    void ensure(int size) {
        if (n == size) return;
        n = size;
        for (auto& g : a) g = RealGrid(size);
        for (auto& g : b) g = RealGrid(size);
        scalar = RealGrid(size);
        product = RealGrid(size);
        masked = SpectralField(size);
        spec = SpectralField(size);
    }
};

Workspace& workspace(int n) {
    thread_local Workspace ws;
    ws.ensure(n);
    return ws;
}

void require_resolution(int expected, int got) {
    if (expected != got)
        throw ConfigError("N", "resolution mismatch: " + std::to_string(expected) + " vs " + std::to_string(got));
}

void require_resolution(int expected, const VectorField& v) {
    for (int i = 0; i < 3; ++i) require_resolution(expected, v[i].resolution());
}

int resolve_cutoff(int n, std::optional<int> cutoff) {
    const int band = dealias_cutoff(n);
    const int m = cutoff.value_or(band);
    if (m < 0 || m > band)
        throw ConfigError("M", "cutoff " + std::to_string(m) + " exceeds the dealiasing band " + std::to_string(band));
    return m;
}

// Grid samples of f restricted to the dealiasing band.
void to_grid(const SpectralField& f, RealGrid& out, Workspace& ws) {
    ws.masked = f;
    galerkin_truncate_inplace(ws.masked, dealias_cutoff(f.resolution()));
    detail::inverse_transform_unchecked(ws.masked, out);
}

// out += scale * d/dx_axis (f)
void add_derivative(SpectralField& out, const SpectralField& f, int axis, double scale) {
    const auto& k = wavenumbers(f.resolution()).k[static_cast<std::size_t>(axis)];
    const Complex* in = f.data();
    Complex* o = out.data();
    const double s = scale * kTwoPi;
    for (std::size_t i = 0; i < f.size(); ++i) o[i] += Complex(-in[i].imag(), in[i].real()) * (s * k[i]);
}

constexpr std::array<std::pair<int, int>, 6> kSymmetricPairs{{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};
constexpr std::array<std::pair<int, int>, 3> kAntisymmetricPairs{{{0, 1}, {0, 2}, {1, 2}}};

// Unprojected tendencies truncated at M, with buoyancy g theta e3 added to du.
void raw_tendency(const State& state, const Params& params, Tendency& out, double& max_speed) {
    const int n = state.resolution();
    require_resolution(n, state.u);
    require_resolution(n, state.b);
    require_resolution(n, state.theta.resolution());
    require_resolution(params.n, n);
    const int m = resolve_cutoff(n, params.cutoff);
    const auto& k = simd::active();
    Workspace& ws = workspace(n);
    const std::size_t len = ws.product.size();

    for (int i = 0; i < 3; ++i) {
        to_grid(state.u[i], ws.a[i], ws);
        to_grid(state.b[i], ws.b[i], ws);
    }
    to_grid(state.theta, ws.scalar, ws);

    const double* ua[3] = {ws.a[0].data(), ws.a[1].data(), ws.a[2].data()};
    const double* ba[3] = {ws.b[0].data(), ws.b[1].data(), ws.b[2].data()};
    max_speed = k.max_speed_sum(ua, ba, len);

    for (SpectralField* f : out.fields()) {
        if (f->resolution() != n) *f = SpectralField(n);
        else f->set_zero();
    }

    // du_k = -d_j (u_j u_k - b_j b_k)
    for (auto [j, l] : kSymmetricPairs) {
        k.multiply_sub(ua[j], ua[l], ba[j], ba[l], ws.product.data(), len);
        forward_transform(ws.product, ws.spec);
        add_derivative(out.du[l], ws.spec, j, -1.0);
        if (j != l) add_derivative(out.du[j], ws.spec, l, -1.0);
    }

    // db_k = -d_j A_jk with A_jk = u_j b_k - b_j u_k antisymmetric
    for (auto [j, l] : kAntisymmetricPairs) {
        k.multiply_sub(ua[j], ba[l], ba[j], ua[l], ws.product.data(), len);
        forward_transform(ws.product, ws.spec);
        add_derivative(out.db[l], ws.spec, j, -1.0);
        add_derivative(out.db[j], ws.spec, l, 1.0);
    }

    // dtheta = -d_j (u_j theta)
    for (int j = 0; j < 3; ++j) {
        k.multiply(ua[j], ws.scalar.data(), ws.product.data(), len);
        forward_transform(ws.product, ws.spec);
        add_derivative(out.dtheta, ws.spec, j, -1.0);
    }

    for (SpectralField* f : out.fields()) galerkin_truncate_inplace(*f, m);

    if (params.g != 0.0) {
        ws.masked = state.theta;
        galerkin_truncate_inplace(ws.masked, m);
        k.axpy_complex(params.g, ws.masked.data(), out.du[2].data(), ws.masked.size());
    }
}

}  // namespace

VectorField advect(const VectorField& u, const VectorField& v, std::optional<int> cutoff) {
    const int n = u.resolution();
    require_resolution(n, u);
    require_resolution(n, v);
    const int m = resolve_cutoff(n, cutoff);
    const auto& k = simd::active();
    Workspace& ws = workspace(n);
    const std::size_t len = ws.product.size();

    for (int i = 0; i < 3; ++i) {
        to_grid(u[i], ws.a[i], ws);
        to_grid(v[i], ws.b[i], ws);
    }

    VectorField out(n);
    for (int j = 0; j < 3; ++j) {
        for (int l = 0; l < 3; ++l) {
            k.multiply(ws.a[j].data(), ws.b[l].data(), ws.product.data(), len);
            forward_transform(ws.product, ws.spec);
            add_derivative(out[l], ws.spec, j, 1.0);
        }
    }
    galerkin_truncate_inplace(out, m);
    leray_project_inplace(out);
    return out;
}

SpectralField scalar_advect(const VectorField& u, const SpectralField& theta, std::optional<int> cutoff) {
    const int n = u.resolution();
    require_resolution(n, u);
    require_resolution(n, theta.resolution());
    const int m = resolve_cutoff(n, cutoff);
    const auto& k = simd::active();
    Workspace& ws = workspace(n);
    const std::size_t len = ws.product.size();

    for (int i = 0; i < 3; ++i) to_grid(u[i], ws.a[i], ws);
    to_grid(theta, ws.scalar, ws);

    SpectralField out(n);
    for (int j = 0; j < 3; ++j) {
        k.multiply(ws.a[j].data(), ws.scalar.data(), ws.product.data(), len);
        forward_transform(ws.product, ws.spec);
        add_derivative(out, ws.spec, j, 1.0);
    }
    galerkin_truncate_inplace(out, m);
    return out;
}

namespace detail {

void rhs_into(const State& state, const Params& params, Tendency& out, double& max_speed) {
    raw_tendency(state, params, out, max_speed);
    leray_project_inplace(out.du);
    leray_project_inplace(out.db);

    for (const SpectralField* f : out.fields()) {
        if (!all_finite(*f)) {
            throw BlowUpError(state.t, std::sqrt(gradient_norm_squared(state.u)),
                              0.5 * (l2_norm_squared(state.u) + l2_norm_squared(state.b) + l2_norm_squared(state.theta)),
                              "non-finite tendency coefficient");
        }
    }
    for (const SpectralField* f : out.fields()) {
        const double defect = hermitian_defect(*f);
        if (defect > 1e-13)
            throw DataCorruptionError("tendency lost Hermitian symmetry (relative defect " + std::to_string(defect) + ")");
    }
}

}  // namespace detail

Tendency rhs(const State& state, const Params& params, double& max_speed) {
    Tendency out(state.resolution());
    detail::rhs_into(state, params, out, max_speed);
    return out;
}

Tendency rhs(const State& state, const Params& params) {
    double max_speed = 0.0;
    return rhs(state, params, max_speed);
}

VectorField momentum_forcing(const State& state, const Params& params) {
    double max_speed = 0.0;
    Tendency out(state.resolution());
    raw_tendency(state, params, out, max_speed);
    return std::move(out.du);
}

SpectralField pressure_recover(const State& state, const Params& params) {
    const VectorField forcing = momentum_forcing(state, params);
    const int n = state.resolution();
    const auto& wn = wavenumbers(n);
    SpectralField p(n);
    Complex* out = p.data();
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Complex kf = wn.k[0][i] * forcing[0].data()[i] + wn.k[1][i] * forcing[1].data()[i] +
                           wn.k[2][i] * forcing[2].data()[i];
        // grad p = k (k.F) / |k|^2  <=>  p = -i (k.F) / (2 pi |k|^2)
        out[i] = Complex(kf.imag(), -kf.real()) * (wn.inv_k_squared[i] / kTwoPi);
    }
    return p;
}

}  // namespace mhdb
