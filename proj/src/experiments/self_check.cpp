#include "mhdb/experiments/self_check.hpp"

#include <algorithm>
#include <cmath>

#include "mhdb/diagnostics/identities.hpp"
#include "mhdb/dynamics/nonlinear.hpp"
#include "mhdb/experiments/initial_condition.hpp"
#include "mhdb/spectral/calculus.hpp"

namespace mhdb {
namespace {

constexpr double kOperatorTolerance = 1e-12;
constexpr double kIdentityTolerance = 1e-11;

double norm(const VectorField& v) { return std::sqrt(l2_norm_squared(v)); }
double norm(const SpectralField& f) { return std::sqrt(l2_norm_squared(f)); }

// A random field with a gradient part, so that projection has something to remove.
VectorField random_vector(int n, int band, std::uint64_t seed) {
    VectorField v(n);
    for (int i = 0; i < 3; ++i) v[i] = random_scalar_field(n, band, 1.0, seed + 101 * static_cast<std::uint64_t>(i));
    return v;
}

}  // namespace

std::vector<CheckResult> run_operator_checks(int n, int trials, unsigned long long seed) {
    const int band = dealias_cutoff(n);
    CheckResult idempotent{"leray_idempotent", 0.0, kOperatorTolerance};
    CheckResult adjoint{"leray_self_adjoint", 0.0, kOperatorTolerance};
    CheckResult solenoidal{"leray_divergence", 0.0, kOperatorTolerance};
    CheckResult energy{"advect_energy_orthogonal", 0.0, kOperatorTolerance};
    CheckResult skew{"advect_skew_symmetric", 0.0, kOperatorTolerance};
    CheckResult scalar{"scalar_advect_orthogonal", 0.0, kOperatorTolerance};
    CheckResult horizontal{"horizontal_identity", 0.0, kIdentityTolerance};
    CheckResult coupled{"coupled_identity", 0.0, kIdentityTolerance};

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = seed * 7919ULL + 17ULL * static_cast<std::uint64_t>(t);
        const VectorField a = random_vector(n, band, s);
        const VectorField c = random_vector(n, band, s + 1000);
        const VectorField pa = leray_project(a);
        idempotent.worst = std::max(idempotent.worst, norm(leray_project(pa) - pa) / norm(pa));
        adjoint.worst = std::max(adjoint.worst, std::abs(inner_product(pa, c) - inner_product(a, leray_project(c))) /
                                                    (norm(a) * norm(c)));
        solenoidal.worst = std::max(solenoidal.worst, divergence_residual(pa));

        const VectorField u = random_solenoidal_field(n, band, 2.0, s + 1);
        const VectorField v = random_solenoidal_field(n, band, 2.0, s + 2);
        const VectorField w = random_solenoidal_field(n, band, 2.0, s + 3);
        const SpectralField theta = random_scalar_field(n, band, 2.0, s + 4);
        const double nu = norm(u), nv = norm(v), nw = norm(w);
        const double gv = std::sqrt(gradient_norm_squared(v)), gw = std::sqrt(gradient_norm_squared(w));

        energy.worst = std::max(energy.worst, std::abs(inner_product(advect(u, v), v)) / (nu * gv * nv));
        skew.worst = std::max(skew.worst, std::abs(inner_product(advect(u, v), w) + inner_product(advect(u, w), v)) /
                                              (nu * gv * nw + nu * gw * nv));
        scalar.worst = std::max(scalar.worst, std::abs(inner_product(scalar_advect(u, theta), theta)) /
                                                  (nu * std::sqrt(gradient_norm_squared(theta)) * norm(theta)));

        horizontal.worst = std::max(horizontal.worst, horizontal_identity_residual(u).relative());
        for (int axis = 0; axis < 3; ++axis)
            coupled.worst = std::max(coupled.worst, coupled_identity_residual(u, v, axis).relative());
    }
    return {idempotent, adjoint, solenoidal, energy, skew, scalar, horizontal, coupled};
}

}  // namespace mhdb
