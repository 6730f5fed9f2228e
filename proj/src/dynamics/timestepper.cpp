#include "mhdb/dynamics/timestepper.hpp"

#include <cmath>
#include <numbers>

#include "mhdb/errors.hpp"
#include "mhdb/simd/kernels.hpp"
#include "mhdb/spectral/calculus.hpp"
#include "mhdb/spectral/transform.hpp"

namespace mhdb {
namespace {

// Diffusivity group of each persisted field: u -> nu, b -> eta, theta -> kappa.
constexpr std::array<int, 7> kGroup{0, 0, 0, 1, 1, 1, 2};

bool state_finite(const State& s) {
    for (const SpectralField* f : s.fields())
        if (!all_finite(*f)) return false;
    return true;
}

}  // namespace

Stepper::Stepper(const Params& params) : params_(params) {
    params_.validate();
    const auto& wn = wavenumbers(params_.n);
    const double diffusivity[3] = {params_.nu, params_.eta, params_.kappa};
    const double four_pi2 = 4.0 * std::numbers::pi * std::numbers::pi;
    for (int g = 0; g < 3; ++g) {
        auto& m = half_step_[static_cast<std::size_t>(g)];
        m.resize(wn.k_squared.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            m[i] = std::exp(-four_pi2 * wn.k_squared[i] * diffusivity[g] * 0.5 * params_.dt);
        diffusive_ = diffusive_ || diffusivity[g] > 0.0;
    }
    stage_ = ey_ = State(params_.n);
    ka_ = kb_ = kc_ = kd_ = Tendency(params_.n);
}

StepReport Stepper::advance(State& y) {
    if (!(params_.dt > 0.0)) throw ConfigError("dt", "time step must be positive");
    if (y.resolution() != params_.n) throw ConfigError("N", "state resolution does not match params");
    const auto& k = simd::active();
    const double h = params_.dt;
    const std::size_t len = y.theta.size();

    auto half = [&](std::size_t c) { return half_step_[static_cast<std::size_t>(kGroup[c])].data(); };

    // a = N(y)
    double max_speed = 0.0, unused = 0.0;
    State& stage = stage_;
    const Tendency& a = ka_;
    const Tendency& b = kb_;
    const Tendency& c3 = kc_;
    const Tendency& d = kd_;
    detail::rhs_into(y, params_, ka_, max_speed);

    // y2 = E (y + h/2 a)
    stage.t = y.t + 0.5 * h;
    {
        auto ys = y.fields();
        auto as = a.fields();
        auto ss = stage.fields();
        for (std::size_t c = 0; c < 7; ++c) {
            if (diffusive_)
                k.scaled_axpy_complex(half(c), ys[c]->data(), 0.5 * h, as[c]->data(), ss[c]->data(), len);
            else {
                *ss[c] = *ys[c];
                k.axpy_complex(0.5 * h, as[c]->data(), ss[c]->data(), len);
            }
        }
    }
    detail::rhs_into(stage, params_, kb_, unused);

    // ey = E y;  y3 = ey + h/2 b
    State& ey = ey_;
    ey = y;
    if (diffusive_) {
        auto es = ey.fields();
        for (std::size_t c = 0; c < 7; ++c) k.scale_complex(es[c]->data(), half(c), len);
    }
    {
        stage = ey;
        stage.t = y.t + 0.5 * h;
        auto bs = b.fields();
        auto ss = stage.fields();
        for (std::size_t c = 0; c < 7; ++c) k.axpy_complex(0.5 * h, bs[c]->data(), ss[c]->data(), len);
    }
    detail::rhs_into(stage, params_, kc_, unused);

    // y4 = E (ey + h c)
    stage.t = y.t + h;
    {
        auto es = ey.fields();
        auto cs = c3.fields();
        auto ss = stage.fields();
        for (std::size_t c = 0; c < 7; ++c) {
            if (diffusive_)
                k.scaled_axpy_complex(half(c), es[c]->data(), h, cs[c]->data(), ss[c]->data(), len);
            else {
                *ss[c] = *es[c];
                k.axpy_complex(h, cs[c]->data(), ss[c]->data(), len);
            }
        }
    }
    detail::rhs_into(stage, params_, kd_, unused);

    // y_new = E (E (y + h/6 a) + h/3 (b + c)) + h/6 d
    {
        auto ys = y.fields();
        auto as = a.fields();
        auto bs = b.fields();
        auto cs = c3.fields();
        auto ds = d.fields();
        for (std::size_t c = 0; c < 7; ++c) {
            Complex* out = ys[c]->data();
            if (diffusive_) k.scaled_axpy_complex(half(c), out, h / 6.0, as[c]->data(), out, len);
            else k.axpy_complex(h / 6.0, as[c]->data(), out, len);
            k.axpy_complex(h / 3.0, bs[c]->data(), out, len);
            k.axpy_complex(h / 3.0, cs[c]->data(), out, len);
            if (diffusive_) k.scale_complex(out, half(c), len);
            k.axpy_complex(h / 6.0, ds[c]->data(), out, len);
        }
    }
    y.t += h;

    leray_project_inplace(y.u);
    leray_project_inplace(y.b);

    StepReport report;
    report.t_new = y.t;
    report.cfl_number = h * max_speed * params_.n;
    report.max_divergence_residual = std::max(divergence_residual(y.u), divergence_residual(y.b));
    const double grad_u = std::sqrt(gradient_norm_squared(y.u));
    report.blowup_flag = !state_finite(y) || !std::isfinite(grad_u) || grad_u > params_.blowup_ceiling;
    return report;
}

std::pair<State, StepReport> step(const State& state, const Params& params) {
    Stepper stepper(params);
    State next = state;
    const StepReport report = stepper.advance(next);
    return {std::move(next), report};
}

double cfl_dt(const State& state, const Params& params, double safety) {
    if (!(safety > 0.0 && safety <= 1.0)) throw ConfigError("safety", "must lie in (0, 1]");
    const double remaining = params.t_end - state.t;
    const int n = state.resolution();
    std::array<RealGrid, 3> u, b;
    for (int i = 0; i < 3; ++i) {
        inverse_transform(state.u[i], u[static_cast<std::size_t>(i)]);
        inverse_transform(state.b[i], b[static_cast<std::size_t>(i)]);
    }
    const double* ua[3] = {u[0].data(), u[1].data(), u[2].data()};
    const double* ba[3] = {b[0].data(), b[1].data(), b[2].data()};
    const double speed = simd::active().max_speed_sum(ua, ba, u[0].size());
    if (!(speed > 0.0)) return remaining;
    return std::min(remaining, safety * (1.0 / n) / speed);
}

}  // namespace mhdb
