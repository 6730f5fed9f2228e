#include "mhdb/diagnostics/monitors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mhdb/diagnostics/norms.hpp"
#include "mhdb/simd/kernels.hpp"

namespace mhdb {

double prodi_serrin_r(double s) {
    if (std::isnan(s) || !(s > 10.0 / 3.0))
        throw std::out_of_range("Prodi-Serrin exponent requires s > 10/3");
    if (std::isinf(s)) return 8.0 / 3.0;
    const double denominator = 0.75 - 2.5 / s;
    if (!(denominator > 0.0)) throw std::out_of_range("Prodi-Serrin exponent requires s > 10/3");
    return 2.0 / denominator;
}

MonitorSample monitor_sample(const State& state, double s, double r) {
    const int n = state.resolution();
    const auto& wn = wavenumbers(n);
    const std::size_t len = wn.k_squared.size();
    AlignedVector<double> horizontal(len), vertical(len), horizontal2(len), vertical2(len);
    const double four_pi2 = 4.0 * std::numbers::pi * std::numbers::pi;
    for (std::size_t i = 0; i < len; ++i) {
        const double kh = wn.k[0][i] * wn.k[0][i] + wn.k[1][i] * wn.k[1][i];
        const double kv = wn.k[2][i] * wn.k[2][i];
        horizontal[i] = four_pi2 * kh;
        vertical[i] = four_pi2 * kv;
        horizontal2[i] = four_pi2 * four_pi2 * wn.k_squared[i] * kh;
        vertical2[i] = four_pi2 * four_pi2 * wn.k_squared[i] * kv;
    }

    const auto& k = simd::active();
    MonitorSample m;
    for (const VectorField* v : {&state.u, &state.b}) {
        for (int c = 0; c < 3; ++c) {
            const Complex* f = (*v)[c].data();
            m.horizontal_gradient += k.weighted_norm2(f, horizontal.data(), len);
            m.vertical_gradient += k.weighted_norm2(f, vertical.data(), len);
            m.horizontal_hessian += k.weighted_norm2(f, horizontal2.data(), len);
            m.vertical_hessian += k.weighted_norm2(f, vertical2.data(), len);
        }
    }
    const SpectralField* components[4] = {&state.u[1], &state.u[2], &state.b[1], &state.b[2]};
    for (std::size_t i = 0; i < 4; ++i) m.lebesgue[i] = std::pow(lp_norm(*components[i], s), r);
    return m;
}

MonitorColumns MonitorAccumulators::columns() const noexcept {
    return {j2(), l2(), lebesgue_integral[0], lebesgue_integral[1], lebesgue_integral[2], lebesgue_integral[3]};
}

MonitorAccumulators make_monitors(double window_start, double s) {
    MonitorAccumulators acc;
    acc.window_start = window_start;
    acc.s = s;
    acc.r = prodi_serrin_r(s);
    return acc;
}

MonitorAccumulators update_monitors(MonitorAccumulators acc, const State& state, double dt) {
    if (state.t < acc.window_start - 1e-12 * std::max(1.0, std::abs(acc.window_start))) return acc;
    const MonitorSample now = monitor_sample(state, acc.s, acc.r);
    acc.horizontal_sup = std::max(acc.horizontal_sup, now.horizontal_gradient);
    acc.vertical_sup = std::max(acc.vertical_sup, now.vertical_gradient);
    if (acc.started) {
        acc.horizontal_integral += 0.5 * dt * (acc.last.horizontal_hessian + now.horizontal_hessian);
        acc.vertical_integral += 0.5 * dt * (acc.last.vertical_hessian + now.vertical_hessian);
        for (std::size_t i = 0; i < 4; ++i)
            acc.lebesgue_integral[i] += 0.5 * dt * (acc.last.lebesgue[i] + now.lebesgue[i]);
    }
    acc.started = true;
    acc.last = now;
    return acc;
}

}  // namespace mhdb
