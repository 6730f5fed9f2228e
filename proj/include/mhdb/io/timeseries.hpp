#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mhdb/diagnostics/record.hpp"

namespace mhdb {

/// CSV header fields, in column order.
const std::vector<std::string>& timeseries_columns();

/// Header row plus one row per record; 17 significant digits, '.' decimal point.
std::string format_timeseries(std::span<const DiagnosticsRecord> records);
void write_timeseries(std::span<const DiagnosticsRecord> records, const std::filesystem::path& path);

/// Inverse of format_timeseries; throws FormatError on a header or field mismatch.
std::vector<DiagnosticsRecord> parse_timeseries(std::string_view text);
std::vector<DiagnosticsRecord> read_timeseries(const std::filesystem::path& path);

/// Shortest round-trip-safe text is not required; this always uses 17 significant digits.
std::string format_double(double value);

}  // namespace mhdb
