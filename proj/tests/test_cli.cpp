#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mhdb/cli/cli.hpp"
#include "mhdb/io/snapshot.hpp"
#include "mhdb/io/timeseries.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "mhdb");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Outcome o;
    o.code = mhdb::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

fs::path scratch(const std::string& name) {
    fs::path d = fs::temp_directory_path() / ("mhdb_test_cli_" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

fs::path write_config(const fs::path& dir, const std::string& physics, const std::string& numerics = "") {
    const fs::path path = dir / "run.ini";
    std::ofstream f(path);
    f << "[physics]\n" << physics << "\n[numerics]\nN = 8\ndt = 0.01\nt_end = 0.04\n" << numerics
      << "\n[initial]\npreset = random-sobolev\namplitude = 0.5\ntheta_amplitude = 0.2\n"
      << "[output]\ndirectory = " << (dir / "out").string() << "\ndiagnostics_every = 1\nsnapshot_every = 2\n";
    return path;
}

nlohmann::json read_json(const fs::path& path) {
    std::ifstream f(path);
    return nlohmann::json::parse(f);
}

}  // namespace

TEST_CASE("check subcommand passes") {
    const Outcome o = invoke({"check", "--n", "8", "--trials", "2"});
    CHECK(o.code == 0);
    CHECK(o.out.find("PASS") != std::string::npos);
    CHECK(o.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors exit with 2 and help exits with 0") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"run"}).code == 2);
    CHECK(invoke({"run", "--config", "x.ini", "--threads", "0"}).code == 2);
    const Outcome help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("sweep-kappa") != std::string::npos);
}

TEST_CASE("run writes a timeseries, snapshots and a summary") {
    const fs::path dir = scratch("run");
    const fs::path cfg = write_config(dir, "nu = 0.01\neta = 0.01\nkappa = 0.01");
    const Outcome o = invoke({"run", "--config", cfg.string()});
    CHECK(o.code == 0);
    const fs::path out = dir / "out";
    const auto records = mhdb::read_timeseries(out / "timeseries.csv");
    CHECK(records.size() == 5);
    CHECK(fs::exists(out / "snapshot_000000.mhdb"));
    CHECK(fs::exists(out / "snapshot_000002.mhdb"));
    CHECK_FALSE(fs::exists(out / "snapshot_000003.mhdb"));
    const mhdb::Snapshot last = mhdb::read_snapshot(out / "snapshot_000002.mhdb");
    CHECK(last.header.t == doctest::Approx(0.04));
    CHECK(last.header.nu == 0.01);
    const auto summary = read_json(out / "summary.json");
    CHECK(summary["steps_taken"] == 4);
    CHECK(summary["blown_up"] == false);
    CHECK(summary["config"].get<std::string>().find("[numerics]") != std::string::npos);
}

TEST_CASE("--output-dir overrides the configured directory") {
    const fs::path dir = scratch("override");
    const fs::path cfg = write_config(dir, "nu = 0.01");
    CHECK(invoke({"run", "--config", cfg.string(), "--output-dir", (dir / "elsewhere").string()}).code == 0);
    CHECK(fs::exists(dir / "elsewhere" / "summary.json"));
    CHECK_FALSE(fs::exists(dir / "out"));
}

TEST_CASE("configuration errors exit with 2 and name the key") {
    const fs::path dir = scratch("bad");
    CHECK(invoke({"run", "--config", (dir / "missing.ini").string()}).code == 2);
    const Outcome o = invoke({"run", "--config", write_config(dir, "kappa = -0.1").string()});
    CHECK(o.code == 2);
    CHECK(o.err.find("kappa") != std::string::npos);
}

TEST_CASE("a blow-up exits with 1 after writing its outputs") {
    const fs::path dir = scratch("blowup");
    const fs::path cfg = write_config(dir, "", "blowup_ceiling = 1e-3\n");
    const Outcome o = invoke({"run", "--config", cfg.string()});
    CHECK(o.code == 1);
    const auto summary = read_json(dir / "out" / "summary.json");
    CHECK(summary["blown_up"] == true);
    CHECK(summary["steps_taken"] == 0);
}

TEST_CASE("sweep subcommands write CSV and JSON summaries") {
    const fs::path dir = scratch("sweeps");
    const fs::path cfg = write_config(dir, "nu = 0.01\neta = 0.01");

    CHECK(invoke({"sweep-kappa", "--config", cfg.string(), "--kappas", "0.1,0.01", "--threads", "2"}).code == 0);
    const auto kappa = read_json(dir / "out" / "kappa_summary.json");
    CHECK(kappa["cases"].size() == 2);
    CHECK(kappa["threads"] == 2);
    CHECK(fs::exists(dir / "out" / "kappa.csv"));

    CHECK(invoke({"depend", "--config", cfg.string(), "--deltas", "1e-3,1e-4"}).code == 0);
    CHECK(read_json(dir / "out" / "dependence_summary.json")["cases"].size() == 2);

    CHECK(invoke({"convergence", "--config", cfg.string(), "--cutoffs", "1,2"}).code == 2);
    CHECK(invoke({"convergence", "--config", cfg.string(), "--cutoffs", "1,2,3"}).code == 0);
    const auto galerkin = read_json(dir / "out" / "galerkin_summary.json");
    CHECK(galerkin["cases"].size() == 3);
}
