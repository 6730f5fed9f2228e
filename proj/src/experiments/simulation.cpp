#include "mhdb/experiments/simulation.hpp"

#include <algorithm>
#include <stdexcept>

#include "mhdb/diagnostics/monitors.hpp"
#include "mhdb/dynamics/timestepper.hpp"
#include "mhdb/errors.hpp"

namespace mhdb {

void RunConfig::validate() const {
    params.validate();
    if (!is_known_preset(initial.preset)) throw ConfigError("preset", "unknown preset '" + initial.preset + "'");
    if (initial.generation_cutoff && *initial.generation_cutoff < 0)
        throw ConfigError("generation_cutoff", "must be >= 0");
    if (!(initial.sigma >= 0.0)) throw ConfigError("sigma", "must be >= 0");
    const long steps = params.step_count();
    if (diagnostics_every < 1 || steps % diagnostics_every != 0)
        throw ConfigError("diagnostics_every", "must be a positive divisor of the step count " + std::to_string(steps));
    if (snapshot_every < 0 || (snapshot_every > 0 && steps % snapshot_every != 0))
        throw ConfigError("snapshot_every", "must be 0 or a divisor of the step count " + std::to_string(steps));
    if (!(monitor_window_start >= 0.0) || monitor_window_start >= params.t_end)
        throw ConfigError("monitor_window_start", "must lie in [0, t_end)");
    try {
        (void)prodi_serrin_r(prodi_serrin_s);
    } catch (const std::out_of_range&) {
        throw ConfigError("prodi_serrin_s", "must exceed 10/3");
    }
}

Trajectory run_simulation(const RunConfig& config) {
    config.validate();
    return run_simulation(config, make_initial_condition(config.initial, config.params));
}

Trajectory run_simulation(const RunConfig& config, State state) {
    config.validate();
    const Params& params = config.params;
    if (state.resolution() != params.n) throw ConfigError("N", "initial state resolution does not match params");

    const long steps = params.step_count();
    const double record_dt = params.dt * config.diagnostics_every;
    Stepper stepper(params);
    MonitorAccumulators monitors = make_monitors(config.monitor_window_start, config.prodi_serrin_s);

    Trajectory out;
    auto record = [&](const State& s) {
        monitors = update_monitors(monitors, s, record_dt);
        DiagnosticsRecord r = compute_record(s, params);
        r.monitors = monitors.columns();
        out.records.push_back(r);
    };

    record(state);
    out.snapshots.push_back(state);

    for (long i = 1; i <= steps; ++i) {
        State next = state;
        // The clock is rebuilt from the step index so that every run samples identical times.
        StepReport report;
        try {
            report = stepper.advance(next);
        } catch (const BlowUpError& e) {
            out.blown_up = true;
            out.blowup_reason = e.what();
            break;
        }
        next.t = static_cast<double>(i) * params.dt;
        out.max_cfl = std::max(out.max_cfl, report.cfl_number);
        if (report.blowup_flag) {
            out.blown_up = true;
            out.blowup_reason = "blow-up at t=" + std::to_string(next.t) + ": non-finite state or ||grad u|| above ceiling";
            break;
        }
        out.max_divergence_residual = std::max(out.max_divergence_residual, report.max_divergence_residual);
        state = std::move(next);
        out.steps_taken = i;
        if (i % config.diagnostics_every == 0) record(state);
        if (config.snapshot_every > 0 && i % config.snapshot_every == 0) out.snapshots.push_back(state);
    }

    if (config.snapshot_every == 0 && out.steps_taken > 0) out.snapshots.push_back(state);
    out.final_state = std::move(state);
    return out;
}

}  // namespace mhdb
