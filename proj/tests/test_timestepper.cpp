#include <doctest.h>

#include <cmath>

#include "mhdb/dynamics/timestepper.hpp"
#include "mhdb/errors.hpp"
#include "mhdb/experiments/initial_condition.hpp"
#include "mhdb/experiments/simulation.hpp"
#include "mhdb/experiments/sweeps.hpp"
#include "mhdb/spectral/calculus.hpp"
#include "mhdb/spectral/transform.hpp"
#include "oracles.hpp"

using namespace mhdb;
using oracle::kPi;
using oracle::kTwoPi;

namespace {

Params base(int n, double dt, double t_end) {
    Params p;
    p.n = n;
    p.cutoff = dealias_cutoff(n);
    p.dt = dt;
    p.t_end = t_end;
    return p;
}

State integrate(State s, const Params& p, int steps) {
    Stepper stepper(p);
    for (int i = 0; i < steps; ++i) stepper.advance(s);
    return s;
}

State random_state(int n, int cutoff, double amplitude, std::uint64_t seed) {
    State s(n);
    s.u = random_solenoidal_field(n, cutoff, 2.0, seed);
    s.b = random_solenoidal_field(n, cutoff, 2.0, seed + 1);
    s.theta = random_scalar_field(n, cutoff, 2.0, seed + 2);
    s.u *= amplitude;
    s.b *= amplitude;
    s.theta *= amplitude;
    return s;
}

}  // namespace

TEST_CASE("diffusion alone is integrated exactly") {
    const int n = 8;
    Params p = base(n, 0.01, 0.1);
    p.kappa = 0.05;
    p.g = 0.0;
    State s(n);
    s.theta = random_scalar_field(n, 2, 0.0, 4);
    const State out = integrate(s, p, 10);
    double worst = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const int k1 = wavenumber(a, n), k2 = wavenumber(b, n), k3 = wavenumber(c, n);
                const double decay = std::exp(-4 * kPi * kPi * (k1 * k1 + k2 * k2 + k3 * k3) * p.kappa * 0.1);
                worst = std::max(worst, std::abs(out.theta(k1, k2, k3) - decay * s.theta(k1, k2, k3)));
            }
    CHECK(worst <= 1e-15);
    CHECK(out.t == doctest::Approx(0.1));
}

TEST_CASE("shear flow and field decay at their own diffusivities") {
    // u = (sin 2 pi x3, 0, 0), b = (0, cos 2 pi x3, 0) carry no nonlinear interaction.
    const int n = 8;
    Params p = base(n, 0.005, 0.05);
    p.nu = 0.03;
    p.eta = 0.07;
    State s(n);
    s.u[0] = forward_transform(oracle::sample(n, [](double, double, double z) { return std::sin(kTwoPi * z); }));
    s.b[1] = forward_transform(oracle::sample(n, [](double, double, double z) { return std::cos(kTwoPi * z); }));
    const State out = integrate(s, p, 10);
    const double du = std::exp(-4 * kPi * kPi * p.nu * 0.05);
    const double db = std::exp(-4 * kPi * kPi * p.eta * 0.05);
    CHECK(oracle::max_abs_diff(out.u[0], du * s.u[0]) <= 1e-15);
    CHECK(oracle::max_abs_diff(out.b[1], db * s.b[1]) <= 1e-15);
    CHECK(oracle::max_abs(out.u[2]) <= 1e-15);
}

TEST_CASE("buoyancy-driven vertical velocity follows the exact forced solution") {
    // theta0 = cos(2 pi x1): u3' = -a u3 + g theta, theta' = -c theta, no transport.
    const int n = 8;
    Params p = base(n, 0.01, 0.2);
    p.nu = 0.02;
    p.kappa = 0.01;
    p.g = 2.0;
    State s(n);
    s.theta = forward_transform(oracle::sample(n, [](double x, double, double) { return std::cos(kTwoPi * x); }));
    const State out = integrate(s, p, 20);
    const double a = 4 * kPi * kPi * p.nu, c = 4 * kPi * kPi * p.kappa, t = 0.2;
    const double expected_u3 = p.g * 0.5 * (std::exp(-c * t) - std::exp(-a * t)) / (a - c);
    CHECK(out.u[2](1, 0, 0).real() == doctest::Approx(expected_u3).epsilon(1e-9));
    CHECK(out.theta(1, 0, 0).real() == doctest::Approx(0.5 * std::exp(-c * t)).epsilon(1e-13));
}

TEST_CASE("a zero state stays zero") {
    const int n = 8;
    const State s(n);
    Params p = base(n, 0.01, 0.1);
    p.nu = 0.1;
    CHECK(integrate(s, p, 3).u == s.u);
}

TEST_CASE("steps keep u and b divergence-free and report the CFL number") {
    const int n = 12;
    const Params p = base(n, 0.002, 0.02);
    State s = random_state(n, 3, 1.0, 3);
    Stepper stepper(p);
    StepReport last;
    for (int i = 0; i < 5; ++i) last = stepper.advance(s);
    CHECK(last.max_divergence_residual <= 1e-14);
    CHECK(divergence_residual(s.u) <= 1e-14);
    CHECK(last.cfl_number > 0.0);
    CHECK_FALSE(last.blowup_flag);
    CHECK(last.t_new == doctest::Approx(0.01));
}

TEST_CASE("step() equals one Stepper::advance") {
    const int n = 8;
    const Params p = base(n, 0.01, 0.1);
    const State s = random_state(n, 2, 1.0, 5);
    auto [next, report] = step(s, p);
    State other = s;
    Stepper(p).advance(other);
    CHECK(next == other);
    CHECK(report.t_new == other.t);
}

TEST_CASE("RK4 with integrating factor converges at fourth order") {
    const int n = 8;
    Params p = base(n, 0.02, 0.16);
    p.nu = 0.01;
    p.eta = 0.02;
    p.kappa = 0.005;
    const State s0 = random_state(n, 2, 1.5, 8);
    Params ref = p;
    ref.dt = 0.16 / 128;
    const State reference = integrate(s0, ref, 128);
    std::vector<double> dts, errs;
    for (int steps : {8, 16, 32}) {
        Params q = p;
        q.dt = 0.16 / steps;
        dts.push_back(q.dt);
        errs.push_back(state_distance(integrate(s0, q, steps), reference));
    }
    const PowerFit fit = fit_power_law(dts, errs);
    MESSAGE("fitted temporal order " << fit.slope);
    CHECK(fit.slope == doctest::Approx(4.0).epsilon(0.125));
}

TEST_CASE("a gradient ceiling breach raises the blow-up flag") {
    const int n = 8;
    Params p = base(n, 0.01, 0.1);
    p.blowup_ceiling = 1e-3;
    State s = random_state(n, 2, 1.0, 2);
    const StepReport r = Stepper(p).advance(s);
    CHECK(r.blowup_flag);
}

TEST_CASE("a blown-up run ends early with a structured result") {
    RunConfig c;
    c.params = base(8, 0.01, 0.1);
    c.params.blowup_ceiling = 1e-3;
    c.initial.preset = "random-sobolev";
    c.diagnostics_every = 1;
    const Trajectory t = run_simulation(c);
    CHECK(t.blown_up);
    CHECK(t.steps_taken == 0);
    CHECK(t.records.size() == 1);
    CHECK_FALSE(t.blowup_reason.empty());
    CHECK(t.final_state == make_initial_condition(c.initial, c.params));
}

TEST_CASE("cfl_dt uses the grid maximum of |u| + |b|") {
    const int n = 8;
    const Params p = base(n, 0.01, 1.0);
    State s = random_state(n, 2, 1.0, 6);
    std::array<RealGrid, 3> u, b;
    for (int i = 0; i < 3; ++i) {
        u[static_cast<std::size_t>(i)] = oracle::dft_inverse(s.u[i]);
        b[static_cast<std::size_t>(i)] = oracle::dft_inverse(s.b[i]);
    }
    double speed = 0.0;
    for (std::size_t j = 0; j < u[0].size(); ++j)
        speed = std::max(speed, std::hypot(u[0].data()[j], u[1].data()[j], u[2].data()[j]) +
                                    std::hypot(b[0].data()[j], b[1].data()[j], b[2].data()[j]));
    CHECK(cfl_dt(s, p, 0.5) == doctest::Approx(0.5 / (n * speed)).epsilon(1e-12));
    s.t = 1.0 - 1e-6;
    CHECK(cfl_dt(s, p, 0.5) == doctest::Approx(1e-6));
    CHECK(cfl_dt(State(n), p, 0.5) == doctest::Approx(1.0));
    CHECK_THROWS_AS(cfl_dt(s, p, 0.0), ConfigError);
    CHECK_THROWS_AS(cfl_dt(s, p, 1.5), ConfigError);
}

TEST_CASE("runs are bitwise reproducible") {
    RunConfig c;
    c.params = base(8, 0.01, 0.05);
    c.params.nu = 0.01;
    c.initial.preset = "random-sobolev";
    c.diagnostics_every = 1;
    const Trajectory a = run_simulation(c);
    const Trajectory b = run_simulation(c);
    CHECK(a.final_state == b.final_state);
    CHECK(a.records == b.records);
    CHECK(a.final_state.t == doctest::Approx(0.05));
}
