#pragma once

#include <filesystem>
#include <string>

#include "mhdb/experiments/simulation.hpp"
#include "mhdb/experiments/sweeps.hpp"

namespace mhdb {

/// label,parameter,error,growth,blown_up,wall_seconds
std::string format_sweep_csv(const SweepResult& result);
void write_sweep_csv(const SweepResult& result, const std::filesystem::path& path);

/// Machine-readable JSON summaries (NaN is written as null).
std::string sweep_summary_json(const SweepResult& result);
std::string run_summary_json(const RunConfig& config, const Trajectory& trajectory, int threads);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace mhdb
