#include "mhdb/io/summary.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "mhdb/errors.hpp"
#include "mhdb/io/config.hpp"
#include "mhdb/io/timeseries.hpp"
#include "mhdb/simd/kernels.hpp"

namespace mhdb {
namespace {

nlohmann::json number(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

}  // namespace

std::string format_sweep_csv(const SweepResult& result) {
    std::string out = "label,parameter,error,growth,blown_up,wall_seconds\n";
    for (const SweepCase& c : result.cases) {
        out += c.label + "," + format_double(c.parameter) + "," + format_double(c.error) + "," +
               format_double(c.growth) + "," + (c.blown_up ? "1" : "0") + "," + format_double(c.wall_seconds) + "\n";
    }
    return out;
}

void write_sweep_csv(const SweepResult& result, const std::filesystem::path& path) {
    write_text(path, format_sweep_csv(result));
}

std::string sweep_summary_json(const SweepResult& result) {
    nlohmann::json j;
    j["kind"] = result.kind;
    j["threads"] = result.threads;
    j["fitted_order"] = number(result.fitted_order);
    j["order_stderr"] = number(result.order_stderr);
    j["monotone"] = result.monotone;
    j["simd"] = std::string(simd::active().name);
    auto& cases = j["cases"] = nlohmann::json::array();
    for (const SweepCase& c : result.cases)
        cases.push_back({{"label", c.label},
                         {"parameter", number(c.parameter)},
                         {"error", number(c.error)},
                         {"growth", number(c.growth)},
                         {"blown_up", c.blown_up},
                         {"wall_seconds", number(c.wall_seconds)}});
    return j.dump(2) + "\n";
}

std::string run_summary_json(const RunConfig& config, const Trajectory& trajectory, int threads) {
    nlohmann::json j;
    j["steps_taken"] = trajectory.steps_taken;
    j["steps_requested"] = config.params.step_count();
    j["final_t"] = number(trajectory.final_state.t);
    j["blown_up"] = trajectory.blown_up;
    j["blowup_reason"] = trajectory.blowup_reason;
    j["max_cfl"] = number(trajectory.max_cfl);
    j["max_divergence_residual"] = number(trajectory.max_divergence_residual);
    j["records"] = trajectory.records.size();
    j["snapshots"] = trajectory.snapshots.size();
    j["threads"] = threads;
    j["simd"] = std::string(simd::active().name);
    j["config"] = serialize_config(config);
    return j.dump(2) + "\n";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw FormatError("write to '" + path.string() + "' failed");
}

}  // namespace mhdb
