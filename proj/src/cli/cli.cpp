#include "mhdb/cli/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mhdb/errors.hpp"
#include "mhdb/experiments/self_check.hpp"
#include "mhdb/experiments/simulation.hpp"
#include "mhdb/experiments/sweeps.hpp"
#include "mhdb/io/config.hpp"
#include "mhdb/io/snapshot.hpp"
#include "mhdb/io/summary.hpp"
#include "mhdb/io/timeseries.hpp"

namespace mhdb {
namespace {

namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kBlowUp = 1;
constexpr int kConfig = 2;

struct Common {
    std::string config_path;
    std::string output_dir;
    int threads = 1;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--config", c.config_path, "INI configuration file")->required();
    cmd->add_option("--output-dir", c.output_dir, "overrides [output] directory");
    cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 256));
}

RunConfig load(const Common& c) {
    RunConfig config = parse_config(c.config_path);
    if (!c.output_dir.empty()) config.output_dir = c.output_dir;
    return config;
}

fs::path prepare_dir(const RunConfig& config) {
    fs::path dir(config.output_dir);
    fs::create_directories(dir);
    return dir;
}

std::string snapshot_name(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "snapshot_%06zu.mhdb", index);
    return buf;
}

int run_command(const Common& c, std::ostream& out) {
    const RunConfig config = load(c);
    const fs::path dir = prepare_dir(config);
    const Trajectory traj = run_simulation(config);
    write_timeseries(traj.records, dir / "timeseries.csv");
    for (std::size_t i = 0; i < traj.snapshots.size(); ++i)
        write_snapshot(traj.snapshots[i], config.params, dir / snapshot_name(i));
    write_text(dir / "summary.json", run_summary_json(config, traj, c.threads));
    out << "steps " << traj.steps_taken << " of " << config.params.step_count() << ", t = " << traj.final_state.t
        << ", max CFL " << traj.max_cfl << "\n";
    if (traj.blown_up) {
        out << traj.blowup_reason << "\n";
        return kBlowUp;
    }
    return kOk;
}

int report_sweep(const SweepResult& r, const RunConfig& config, std::ostream& out) {
    const fs::path dir = prepare_dir(config);
    write_sweep_csv(r, dir / (r.kind + ".csv"));
    write_text(dir / (r.kind + "_summary.json"), sweep_summary_json(r));
    out << format_sweep_csv(r);
    out << "fitted_order " << format_double(r.fitted_order) << " +- " << format_double(r.order_stderr)
        << ", monotone " << (r.monotone ? "yes" : "no") << "\n";
    for (const SweepCase& sc : r.cases)
        if (sc.blown_up) return kBlowUp;
    return kOk;
}

int check_command(int n, int trials, std::ostream& out) {
    bool ok = true;
    for (const CheckResult& r : run_operator_checks(n, trials)) {
        out << r.name << " " << format_double(r.worst) << " <= " << r.tolerance << " "
            << (r.passed() ? "PASS" : "FAIL") << "\n";
        ok = ok && r.passed();
    }
    return ok ? kOk : kBlowUp;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Galerkin solver for the 3D Boussinesq-MHD system on the unit torus"};
    app.require_subcommand(1);

    Common run_opts, kappa_opts, conv_opts, dep_opts;
    std::vector<double> kappas{1e-1, 1e-2, 1e-3};
    std::vector<int> cutoffs{4, 8, 16, 32};
    std::vector<double> deltas{1e-3, 1e-4};
    int check_n = 16;
    int check_trials = 10;

    CLI::App* run = app.add_subcommand("run", "integrate one trajectory");
    add_common(run, run_opts);
    CLI::App* sweep = app.add_subcommand("sweep-kappa", "vanishing-diffusivity sweep against kappa = 0");
    add_common(sweep, kappa_opts);
    sweep->add_option("--kappas", kappas, "diffusivities")->delimiter(',');
    CLI::App* conv = app.add_subcommand("convergence", "Galerkin convergence in the cutoff M");
    add_common(conv, conv_opts);
    conv->add_option("--cutoffs", cutoffs, "cutoffs, the largest is the reference")->delimiter(',');
    CLI::App* dep = app.add_subcommand("depend", "continuous dependence on the initial velocity");
    add_common(dep, dep_opts);
    dep->add_option("--deltas", deltas, "perturbation sizes")->delimiter(',');
    CLI::App* check = app.add_subcommand("check", "operator identity self-check");
    check->add_option("--n", check_n, "grid size")->check(CLI::Range(4, 256));
    check->add_option("--trials", check_trials, "random trials")->check(CLI::Range(1, 100000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kConfig;
    }

    try {
        if (run->parsed()) return run_command(run_opts, out);
        if (sweep->parsed()) {
            const RunConfig config = load(kappa_opts);
            return report_sweep(kappa_sweep(config, kappas, kappa_opts.threads), config, out);
        }
        if (conv->parsed()) {
            const RunConfig config = load(conv_opts);
            return report_sweep(galerkin_convergence(config, cutoffs, conv_opts.threads), config, out);
        }
        if (dep->parsed()) {
            const RunConfig config = load(dep_opts);
            return report_sweep(continuous_dependence(config, deltas, dep_opts.threads), config, out);
        }
        if (check->parsed()) return check_command(check_n, check_trials, out);
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return kConfig;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << "\n";
        return kConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBlowUp;
    }
    return kConfig;
}

}  // namespace mhdb
