#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mhdb/experiments/simulation.hpp"

namespace mhdb {

// Configuration files are flat INI: `[section]` headers, `key = value` lines,
// and `#` or `;` comments. Sections and keys:
//
//   [physics]   nu, eta, kappa (default 0), g (default 1)
//   [numerics]  N (required), M (default floor((N-1)/3)), dt (default 1e-3),
//               t_end (required), blowup_ceiling (default 1e6)
//   [initial]   preset (required), amplitude (1), seed (0), sigma (4),
//               theta_amplitude, generation_cutoff
//   [output]    directory ("output"), diagnostics_every (10), snapshot_every (0),
//               monitor_window_start (0), prodi_serrin_s (4)
//
// Unknown sections or keys, duplicates and malformed values are rejected with a
// ConfigError naming the key.

RunConfig parse_config_text(std::string_view text);
RunConfig parse_config(const std::filesystem::path& path);

/// Text that parse_config_text maps back to an equal RunConfig.
std::string serialize_config(const RunConfig& config);

}  // namespace mhdb
