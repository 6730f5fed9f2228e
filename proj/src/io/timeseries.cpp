#include "mhdb/io/timeseries.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "mhdb/errors.hpp"

namespace mhdb {
namespace {

constexpr std::size_t kColumns = 25;

std::array<double*, kColumns> slots(DiagnosticsRecord& r) {
    MonitorColumns& m = r.monitors;
    return {&r.t, &r.energy, &r.dissipation, &r.buoyancy_flux, &r.k_functional,
            &r.u_sobolev[0], &r.u_sobolev[1], &r.u_sobolev[2],
            &r.b_sobolev[0], &r.b_sobolev[1], &r.b_sobolev[2],
            &r.theta_sobolev[0], &r.theta_sobolev[1], &r.theta_sobolev[2],
            &r.theta_min, &r.theta_max, &r.theta_l2, &r.div_u, &r.div_b,
            &m.j2, &m.l2, &m.ps_u2, &m.ps_u3, &m.ps_b2, &m.ps_b3};
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

const std::vector<std::string>& timeseries_columns() {
    static const std::vector<std::string> cols{
        "t", "energy", "dissipation", "buoyancy_flux", "K",
        "u_H1", "u_H2", "u_H3", "b_H1", "b_H2", "b_H3", "theta_H1", "theta_H2", "theta_H3",
        "theta_min", "theta_max", "theta_L2", "div_u", "div_b",
        "J2", "L2", "ps_u2", "ps_u3", "ps_b2", "ps_b3"};
    return cols;
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string format_timeseries(std::span<const DiagnosticsRecord> records) {
    std::string out;
    const auto& cols = timeseries_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
    out += '\n';
    for (DiagnosticsRecord r : records) {
        const auto s = slots(r);
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ',';
            out += format_double(*s[i]);
        }
        out += '\n';
    }
    return out;
}

void write_timeseries(std::span<const DiagnosticsRecord> records, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("timeseries: cannot open '" + path.string() + "' for writing");
    out << format_timeseries(records);
    if (!out) throw FormatError("timeseries: write to '" + path.string() + "' failed");
}

std::vector<DiagnosticsRecord> parse_timeseries(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw FormatError("timeseries: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split(line);
    const auto& cols = timeseries_columns();
    if (header.size() != cols.size()) throw FormatError("timeseries: unexpected header");
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (header[i] != cols[i]) throw FormatError("timeseries: unexpected column '" + std::string(header[i]) + "'");

    std::vector<DiagnosticsRecord> out;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split(line);
        if (fields.size() != cols.size())
            throw FormatError("timeseries: row " + std::to_string(row) + " has " + std::to_string(fields.size()) + " fields");
        DiagnosticsRecord r;
        const auto s = slots(r);
        for (std::size_t i = 0; i < s.size(); ++i) {
            const char* end = fields[i].data() + fields[i].size();
            auto [ptr, ec] = std::from_chars(fields[i].data(), end, *s[i]);
            if (ec != std::errc{} || ptr != end)
                throw FormatError("timeseries: bad value '" + std::string(fields[i]) + "' in column " + cols[i]);
        }
        out.push_back(r);
    }
    return out;
}

std::vector<DiagnosticsRecord> read_timeseries(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("timeseries: cannot open '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_timeseries(text.str());
}

}  // namespace mhdb
