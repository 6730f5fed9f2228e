#pragma once

#include <string>
#include <vector>

#include "mhdb/diagnostics/record.hpp"
#include "mhdb/experiments/initial_condition.hpp"

namespace mhdb {

struct RunConfig {
    Params params;
    InitialCondition initial;
    int diagnostics_every = 10;  ///< steps between DiagnosticsRecords
    int snapshot_every = 0;      ///< steps between stored States; 0 keeps only the initial and final ones
    std::string output_dir = "output";
    double monitor_window_start = 0.0;
    double prodi_serrin_s = 4.0;

    /// Params invariants plus cadence checks; throws ConfigError naming the key.
    void validate() const;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct Trajectory {
    std::vector<DiagnosticsRecord> records;  ///< at t = 0 and every diagnostics_every steps
    std::vector<State> snapshots;            ///< at t = 0 and every snapshot_every steps
    State final_state;                       ///< last finite state reached
    long steps_taken = 0;
    double max_cfl = 0.0;
    double max_divergence_residual = 0.0;
    bool blown_up = false;
    std::string blowup_reason;
};

/// Integrates from make_initial_condition(config.initial, config.params) to t_end.
/// A blow-up ends the run early with blown_up set; it is never thrown.
Trajectory run_simulation(const RunConfig& config);

/// Same, from a caller-supplied initial state.
Trajectory run_simulation(const RunConfig& config, State initial);

}  // namespace mhdb
