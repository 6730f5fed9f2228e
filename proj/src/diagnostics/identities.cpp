#include "mhdb/diagnostics/identities.hpp"

#include <array>
#include <cmath>
#include <string>

#include "mhdb/errors.hpp"
#include "mhdb/spectral/calculus.hpp"
#include "mhdb/spectral/transform.hpp"

namespace mhdb {
namespace {

constexpr double kSolenoidalTolerance = 1e-10;

using Grid3 = std::array<RealGrid, 3>;
using Grid33 = std::array<std::array<RealGrid, 3>, 3>;

// Grid samples of a vector field and its derivatives, restricted to the dealiasing band.
struct Sampled {
    Grid3 value;
    Grid33 grad;  ///< grad[j][k] = d_j v_k
};

Sampled sample(const VectorField& v) {
    const int band = dealias_cutoff(v.resolution());
    Sampled s;
    for (int k = 0; k < 3; ++k) {
        const SpectralField f = galerkin_truncate(v[k], band);
        s.value[k] = inverse_transform(f);
        for (int j = 0; j < 3; ++j) s.grad[j][k] = inverse_transform(partial(f, j));
    }
    return s;
}

RealGrid second_derivative_grid(const SpectralField& f, int a, int b) {
    return inverse_transform(second_partial(galerkin_truncate(f, dealias_cutoff(f.resolution())), a, b));
}

void require_solenoidal(const VectorField& v, const char* name) {
    const double r = divergence_residual(v);
    if (r > kSolenoidalTolerance)
        throw PreconditionError(std::string(name) + " is not divergence-free (residual " + std::to_string(r) + ")");
}

double gradient_magnitude(const Grid33& g, std::size_t i) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) s += g[j][k].data()[i] * g[j][k].data()[i];
    return std::sqrt(s);
}

}  // namespace

IdentityResidual horizontal_identity_residual(const VectorField& u) {
    require_solenoidal(u, "u");
    const Sampled s = sample(u);
    std::array<RealGrid, 2> lap_h;
    for (int k = 0; k < 2; ++k) {
        const SpectralField f = galerkin_truncate(u[k], dealias_cutoff(u.resolution()));
        lap_h[k] = inverse_transform(horizontal_laplacian(f));
    }

    const std::size_t len = s.value[0].size();
    double lhs = 0.0, rhs = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        auto d = [&](int j, int k) { return s.grad[j][k].data()[i]; };
        double l = 0.0, r = 0.0;
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                l += s.value[j].data()[i] * d(j, k) * lap_h[k].data()[i];
                r += 0.5 * d(j, k) * d(j, k) * d(2, 2);
            }
        r += -d(0, 0) * d(1, 1) * d(2, 2) + d(0, 1) * d(1, 0) * d(2, 2);
        lhs += l;
        rhs += r;
        const double g = gradient_magnitude(s.grad, i);
        scale += g * g * g;
    }
    const double inv = 1.0 / static_cast<double>(len);
    IdentityResidual out;
    out.lhs = lhs * inv;
    out.rhs = rhs * inv;
    out.residual = std::abs(out.lhs - out.rhs);
    out.scale = scale * inv;
    return out;
}

IdentityResidual coupled_identity_residual(const VectorField& u, const VectorField& b, int axis) {
    if (axis < 0 || axis > 2) throw ConfigError("axis", "axis must be 0, 1 or 2");
    if (u.resolution() != b.resolution()) throw ConfigError("N", "u and b resolutions differ");
    require_solenoidal(u, "u");
    require_solenoidal(b, "b");
    const Sampled su = sample(u);
    const Sampled sb = sample(b);
    Grid3 uii, bii;
    for (int k = 0; k < 3; ++k) {
        uii[k] = second_derivative_grid(u[k], axis, axis);
        bii[k] = second_derivative_grid(b[k], axis, axis);
    }

    const std::size_t len = su.value[0].size();
    const int a = axis;
    double lhs = 0.0, rhs = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        auto du = [&](int j, int k) { return su.grad[j][k].data()[i]; };
        auto db = [&](int j, int k) { return sb.grad[j][k].data()[i]; };
        double l = 0.0, r = 0.0;
        for (int k = 0; k < 3; ++k) {
            double u_grad_u = 0.0, b_grad_b = 0.0, u_grad_b = 0.0, b_grad_u = 0.0;
            for (int j = 0; j < 3; ++j) {
                const double uj = su.value[j].data()[i];
                const double bj = sb.value[j].data()[i];
                u_grad_u += uj * du(j, k);
                b_grad_b += bj * db(j, k);
                u_grad_b += uj * db(j, k);
                b_grad_u += bj * du(j, k);
                r += -du(a, j) * du(j, k) * du(a, k) + db(a, j) * db(j, k) * du(a, k) -
                     du(a, j) * db(j, k) * db(a, k) + db(a, j) * du(j, k) * db(a, k);
            }
            l += (u_grad_u - b_grad_b) * uii[k].data()[i] + (u_grad_b - b_grad_u) * bii[k].data()[i];
        }
        lhs += l;
        rhs += r;
        const double g = gradient_magnitude(su.grad, i) + gradient_magnitude(sb.grad, i);
        scale += g * g * g;
    }
    const double inv = 1.0 / static_cast<double>(len);
    IdentityResidual out;
    out.lhs = lhs * inv;
    out.rhs = rhs * inv;
    out.residual = std::abs(out.lhs - out.rhs);
    out.scale = scale * inv;
    return out;
}

}  // namespace mhdb
