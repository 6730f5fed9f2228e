#include "mhdb/io/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "mhdb/errors.hpp"
#include "mhdb/io/timeseries.hpp"
#include "mhdb/spectral/calculus.hpp"

namespace mhdb {
namespace {

const std::map<std::string, std::set<std::string>>& schema() {
    static const std::map<std::string, std::set<std::string>> s{
        {"physics", {"nu", "eta", "kappa", "g"}},
        {"numerics", {"N", "M", "dt", "t_end", "blowup_ceiling"}},
        {"initial", {"preset", "amplitude", "seed", "sigma", "theta_amplitude", "generation_cutoff"}},
        {"output", {"directory", "diagnostics_every", "snapshot_every", "monitor_window_start", "prodi_serrin_s"}},
    };
    return s;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(const std::string& key, std::string_view text) {
    T value{};
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw ConfigError(key, "cannot parse '" + std::string(text) + "' as a number");
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(value)) throw ConfigError(key, "must be finite");
    }
    return value;
}

}  // namespace

RunConfig parse_config_text(std::string_view text) {
    // section -> key -> value
    std::map<std::string, std::map<std::string, std::string>> values;
    std::string section;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#' || line.front() == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("line " + std::to_string(line_no), "unterminated section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (!schema().contains(section)) throw ConfigError(section, "unknown section");
            values[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError("line " + std::to_string(line_no), "expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        std::string_view value = trim(line.substr(eq + 1));
        const auto hash = value.find_first_of("#;");
        if (hash != std::string_view::npos) value = trim(value.substr(0, hash));
        if (section.empty()) throw ConfigError(key, "key outside of any section");
        if (!schema().at(section).contains(key)) throw ConfigError(key, "unknown key in [" + section + "]");
        auto& slot = values[section];
        if (slot.contains(key)) throw ConfigError(key, "duplicate key");
        slot.emplace(key, std::string(value));
    }

    auto find = [&](const std::string& sec, const std::string& key) -> const std::string* {
        auto s = values.find(sec);
        if (s == values.end()) return nullptr;
        auto k = s->second.find(key);
        return k == s->second.end() ? nullptr : &k->second;
    };
    auto require = [&](const std::string& sec, const std::string& key) -> const std::string& {
        const std::string* v = find(sec, key);
        if (!v) throw ConfigError(key, "missing required key in [" + sec + "]");
        return *v;
    };
    auto read_double = [&](const std::string& sec, const std::string& key, double& out) {
        if (const std::string* v = find(sec, key)) out = parse_number<double>(key, *v);
    };
    auto read_int = [&](const std::string& sec, const std::string& key, int& out) {
        if (const std::string* v = find(sec, key)) out = parse_number<int>(key, *v);
    };

    RunConfig c;
    Params& p = c.params;
    read_double("physics", "nu", p.nu);
    read_double("physics", "eta", p.eta);
    read_double("physics", "kappa", p.kappa);
    read_double("physics", "g", p.g);

    p.n = parse_number<int>("N", require("numerics", "N"));
    if (p.n < 4 || p.n % 2 != 0) throw ConfigError("N", "must be even and >= 4");
    p.cutoff = dealias_cutoff(p.n);
    read_int("numerics", "M", p.cutoff);
    read_double("numerics", "dt", p.dt);
    p.t_end = parse_number<double>("t_end", require("numerics", "t_end"));
    read_double("numerics", "blowup_ceiling", p.blowup_ceiling);

    c.initial.preset = require("initial", "preset");
    read_double("initial", "amplitude", c.initial.amplitude);
    if (const std::string* v = find("initial", "seed")) p.seed = parse_number<std::uint64_t>("seed", *v);
    read_double("initial", "sigma", c.initial.sigma);
    if (const std::string* v = find("initial", "theta_amplitude"))
        c.initial.theta_amplitude = parse_number<double>("theta_amplitude", *v);
    if (const std::string* v = find("initial", "generation_cutoff"))
        c.initial.generation_cutoff = parse_number<int>("generation_cutoff", *v);

    if (const std::string* v = find("output", "directory")) c.output_dir = *v;
    read_int("output", "diagnostics_every", c.diagnostics_every);
    read_int("output", "snapshot_every", c.snapshot_every);
    read_double("output", "monitor_window_start", c.monitor_window_start);
    read_double("output", "prodi_serrin_s", c.prodi_serrin_s);

    c.validate();
    return c;
}

RunConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str());
}

std::string serialize_config(const RunConfig& c) {
    const Params& p = c.params;
    std::string s;
    auto line = [&](const char* key, const std::string& value) { s += std::string(key) + " = " + value + "\n"; };
    s += "[physics]\n";
    line("nu", format_double(p.nu));
    line("eta", format_double(p.eta));
    line("kappa", format_double(p.kappa));
    line("g", format_double(p.g));
    s += "\n[numerics]\n";
    line("N", std::to_string(p.n));
    line("M", std::to_string(p.cutoff));
    line("dt", format_double(p.dt));
    line("t_end", format_double(p.t_end));
    line("blowup_ceiling", format_double(p.blowup_ceiling));
    s += "\n[initial]\n";
    line("preset", c.initial.preset);
    line("amplitude", format_double(c.initial.amplitude));
    line("seed", std::to_string(p.seed));
    line("sigma", format_double(c.initial.sigma));
    if (c.initial.theta_amplitude) line("theta_amplitude", format_double(*c.initial.theta_amplitude));
    if (c.initial.generation_cutoff) line("generation_cutoff", std::to_string(*c.initial.generation_cutoff));
    s += "\n[output]\n";
    line("directory", c.output_dir);
    line("diagnostics_every", std::to_string(c.diagnostics_every));
    line("snapshot_every", std::to_string(c.snapshot_every));
    line("monitor_window_start", format_double(c.monitor_window_start));
    line("prodi_serrin_s", format_double(c.prodi_serrin_s));
    return s;
}

}  // namespace mhdb
