#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "mhdb/dynamics/params.hpp"
#include "mhdb/dynamics/state.hpp"

namespace mhdb {

// Snapshot layout, all little-endian:
//   bytes  0..3   magic "MHDB"
//          4..7   format version (u32) = 1
//          8..11  N (u32)
//         12..15  cutoff M (u32)
//         16..55  t, nu, eta, kappa, g (f64 each)
//         56..59  field count (u32) = 7
//   then 7 fields u1 u2 u3 b1 b2 b3 theta, each N^3 coefficients as (re, im) f64
//   pairs, row-major over (k1, k2, k3) with every axis ascending from -N/2 to N/2-1.

inline constexpr std::uint32_t kSnapshotVersion = 1;
inline constexpr std::uint32_t kSnapshotFieldCount = 7;
inline constexpr std::size_t kSnapshotHeaderBytes = 60;

struct SnapshotHeader {
    std::uint32_t version = kSnapshotVersion;
    std::uint32_t n = 0;
    std::uint32_t cutoff = 0;
    double t = 0.0;
    double nu = 0.0;
    double eta = 0.0;
    double kappa = 0.0;
    double g = 0.0;
    std::uint32_t field_count = kSnapshotFieldCount;
};

struct Snapshot {
    SnapshotHeader header;
    State state;
};

std::vector<std::byte> encode_snapshot(const State& state, const Params& params);

/// Throws FormatError for a bad magic, version, field count or length, and
/// DataCorruptionError if a field is not Hermitian to 1e-10.
Snapshot decode_snapshot(std::span<const std::byte> bytes);

void write_snapshot(const State& state, const Params& params, const std::filesystem::path& path);
Snapshot read_snapshot(const std::filesystem::path& path);

}  // namespace mhdb
