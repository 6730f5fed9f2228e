#include "mhdb/experiments/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <numeric>
#include <thread>

#include "mhdb/errors.hpp"
#include "mhdb/spectral/calculus.hpp"

namespace mhdb {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Runs job(i) for i in [0, count) on at most `threads` workers. Jobs are
// independent, so the assignment of jobs to workers does not affect results.
void run_parallel(std::size_t count, int threads, const std::function<void(std::size_t)>& job) {
    const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                job(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

struct TimedRun {
    Trajectory trajectory;
    double seconds = 0.0;
};

TimedRun timed_run(const RunConfig& config, State initial) {
    const auto start = std::chrono::steady_clock::now();
    TimedRun r;
    r.trajectory = run_simulation(config, std::move(initial));
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

RunConfig with_sampling(RunConfig config) {
    if (config.snapshot_every == 0) config.snapshot_every = config.diagnostics_every;
    return config;
}

double max_distance(const Trajectory& a, const Trajectory& b) {
    double worst = 0.0;
    const std::size_t count = std::min(a.snapshots.size(), b.snapshots.size());
    for (std::size_t i = 0; i < count; ++i) worst = std::max(worst, state_distance(a.snapshots[i], b.snapshots[i]));
    return worst;
}

std::string format_label(const char* prefix, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s=%.6g", prefix, value);
    return buf;
}

void fill_fit(SweepResult& result, const std::vector<double>& x, const std::vector<double>& y, double sign) {
    if (x.size() < 2) {
        result.fitted_order = kNaN;
        result.order_stderr = kNaN;
        return;
    }
    const PowerFit fit = fit_power_law(x, y);
    result.fitted_order = sign * fit.slope;
    result.order_stderr = fit.stderr_slope;
}

bool is_fast_size(int n) {
    for (int p : {2, 3, 5})
        while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace

PowerFit fit_power_law(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw ConfigError("fit", "need at least two matching points");
    const std::size_t n = x.size();
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw ConfigError("fit", "power-law fit needs positive data");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
    }
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (!(sxx > 0.0)) throw ConfigError("fit", "abscissae must not all coincide");
    PowerFit fit;
    fit.slope = sxy / sxx;
    if (n > 2) {
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double e = ly[i] - (my + fit.slope * (lx[i] - mx));
            ss += e * e;
        }
        fit.stderr_slope = std::sqrt(ss / static_cast<double>(n - 2) / sxx);
    }
    return fit;
}

int grid_for_cutoff(int cutoff) {
    if (cutoff < 0) throw ConfigError("M", "cutoff must be >= 0");
    int n = std::max(4, 3 * cutoff + 1);
    if (n % 2 != 0) ++n;
    while (!is_fast_size(n)) n += 2;
    return n;
}

double state_distance(const State& a, const State& b) {
    const int n = std::max(a.resolution(), b.resolution());
    const State ra = a.resolution() == n ? a : resample(a, n);
    const State rb = b.resolution() == n ? b : resample(b, n);
    double sum = 0.0;
    const auto fa = ra.fields();
    const auto fb = rb.fields();
    for (std::size_t c = 0; c < fa.size(); ++c) sum += l2_norm_squared(*fa[c] - *fb[c]);
    return std::sqrt(sum);
}

SweepResult kappa_sweep(const RunConfig& base, std::span<const double> kappas, int threads) {
    base.validate();
    if (kappas.empty()) throw ConfigError("kappas", "need at least one diffusivity");
    for (double k : kappas)
        if (!(k >= 0.0) || !std::isfinite(k)) throw ConfigError("kappa", "sweep values must be finite and >= 0");

    const RunConfig config = with_sampling(base);
    const State initial = make_initial_condition(config.initial, config.params);

    std::vector<double> values{0.0};
    values.insert(values.end(), kappas.begin(), kappas.end());
    std::vector<TimedRun> runs(values.size());
    run_parallel(values.size(), threads, [&](std::size_t i) {
        RunConfig c = config;
        c.params.kappa = values[i];
        runs[i] = timed_run(c, initial);
    });

    SweepResult result;
    result.kind = "kappa";
    result.threads = threads;
    const Trajectory& reference = runs[0].trajectory;
    std::vector<double> fx, fy;
    for (std::size_t i = 1; i < values.size(); ++i) {
        SweepCase c;
        c.label = format_label("kappa", values[i]);
        c.parameter = values[i];
        c.growth = kNaN;
        c.wall_seconds = runs[i].seconds;
        c.blown_up = runs[i].trajectory.blown_up || reference.blown_up;
        c.error = c.blown_up ? kNaN : max_distance(runs[i].trajectory, reference);
        if (!c.blown_up && c.parameter > 0.0 && c.error > 0.0) {
            fx.push_back(c.parameter);
            fy.push_back(c.error);
        }
        result.cases.push_back(c);
    }
    fill_fit(result, fx, fy, 1.0);

    std::vector<SweepCase> ordered = result.cases;
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.parameter > b.parameter; });
    result.monotone = std::none_of(ordered.begin(), ordered.end(), [](const auto& c) { return c.blown_up; });
    for (std::size_t i = 1; i < ordered.size() && result.monotone; ++i)
        result.monotone = ordered[i].error < ordered[i - 1].error;
    return result;
}

SweepResult galerkin_convergence(const RunConfig& base, std::span<const int> cutoffs, int threads) {
    base.validate();
    if (cutoffs.size() < 3) throw ConfigError("cutoffs", "a convergence fit needs at least 3 cutoffs");
    for (int m : cutoffs)
        if (m < 1) throw ConfigError("cutoffs", "cutoffs must be >= 1");
    const int reference_cutoff = *std::max_element(cutoffs.begin(), cutoffs.end());

    std::vector<int> ms(cutoffs.begin(), cutoffs.end());
    std::erase(ms, reference_cutoff);
    ms.push_back(reference_cutoff);

    RunConfig shared = base;
    shared.initial.generation_cutoff = base.initial.generation_cutoff.value_or(reference_cutoff);
    shared.snapshot_every = 0;
    shared.diagnostics_every = static_cast<int>(base.params.step_count());

    std::vector<TimedRun> runs(ms.size());
    run_parallel(ms.size(), threads, [&](std::size_t i) {
        RunConfig c = shared;
        c.params.cutoff = ms[i];
        c.params.n = grid_for_cutoff(ms[i]);
        runs[i] = timed_run(c, make_initial_condition(c.initial, c.params));
    });

    const Trajectory& reference = runs.back().trajectory;
    SweepResult result;
    result.kind = "galerkin";
    result.threads = threads;
    for (int m : cutoffs) {
        const std::size_t i = m == reference_cutoff ? ms.size() - 1
                                                    : static_cast<std::size_t>(std::find(ms.begin(), ms.end(), m) - ms.begin());
        SweepCase c;
        c.label = "M=" + std::to_string(m);
        c.parameter = m;
        c.growth = kNaN;
        c.wall_seconds = runs[i].seconds;
        c.blown_up = runs[i].trajectory.blown_up || reference.blown_up;
        c.error = c.blown_up ? kNaN : state_distance(runs[i].trajectory.final_state, reference.final_state);
        result.cases.push_back(c);
    }

    std::vector<double> fx, fy;
    for (const auto& c : result.cases)
        if (!c.blown_up && c.parameter < reference_cutoff && c.error > 0.0) {
            fx.push_back(c.parameter);
            fy.push_back(c.error * c.error);
        }
    fill_fit(result, fx, fy, -1.0);

    std::vector<SweepCase> ordered = result.cases;
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.parameter < b.parameter; });
    result.monotone = std::none_of(ordered.begin(), ordered.end(), [](const auto& c) { return c.blown_up; });
    for (std::size_t i = 1; i < ordered.size() && result.monotone; ++i)
        result.monotone = ordered[i].error < ordered[i - 1].error;
    return result;
}

SweepResult continuous_dependence(const RunConfig& base, std::span<const double> deltas, int threads) {
    base.validate();
    if (deltas.empty()) throw ConfigError("deltas", "need at least one perturbation size");
    for (double d : deltas)
        if (!(d >= 0.0) || !std::isfinite(d)) throw ConfigError("deltas", "perturbation sizes must be finite and >= 0");

    const RunConfig config = with_sampling(base);
    const Params& p = config.params;
    const State initial = make_initial_condition(config.initial, p);
    VectorField direction = random_solenoidal_field(p.n, p.cutoff, config.initial.sigma, p.seed ^ 0x9e3779b97f4a7c15ULL);
    galerkin_truncate_inplace(direction, p.cutoff);
    leray_project_inplace(direction);

    std::vector<State> starts{initial};
    for (double d : deltas) {
        State s = initial;
        VectorField shift = direction;
        shift *= d;
        s.u += shift;
        if (d > 0.0 && !(state_distance(s, initial) > 0.0))
            throw ConfigError("deltas", "perturbation of size " + std::to_string(d) + " vanishes");
        starts.push_back(std::move(s));
    }

    std::vector<TimedRun> runs(starts.size());
    run_parallel(starts.size(), threads, [&](std::size_t i) { runs[i] = timed_run(config, starts[i]); });

    SweepResult result;
    result.kind = "dependence";
    result.threads = threads;
    const Trajectory& reference = runs[0].trajectory;
    std::vector<double> fx, fy;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        const Trajectory& t = runs[i + 1].trajectory;
        SweepCase c;
        c.label = format_label("delta", deltas[i]);
        c.parameter = deltas[i];
        c.wall_seconds = runs[i + 1].seconds;
        c.blown_up = t.blown_up || reference.blown_up;
        if (c.blown_up) {
            c.error = kNaN;
            c.growth = kNaN;
        } else {
            c.error = max_distance(t, reference);
            const double x0 = state_distance(t.snapshots.front(), reference.snapshots.front());
            c.growth = x0 > 0.0 ? c.error / x0 : kNaN;
            if (c.parameter > 0.0 && c.error > 0.0) {
                fx.push_back(c.parameter);
                fy.push_back(c.error);
            }
        }
        result.cases.push_back(c);
    }
    fill_fit(result, fx, fy, 1.0);

    std::vector<SweepCase> ordered = result.cases;
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.parameter > b.parameter; });
    result.monotone = std::none_of(ordered.begin(), ordered.end(), [](const auto& c) { return c.blown_up; });
    for (std::size_t i = 1; i < ordered.size() && result.monotone; ++i)
        result.monotone = ordered[i].error < ordered[i - 1].error;
    return result;
}

}  // namespace mhdb
