#include "mhdb/io/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "mhdb/errors.hpp"
#include "mhdb/spectral/calculus.hpp"
#include "mhdb/spectral/transform.hpp"

namespace mhdb {
namespace {

constexpr char kMagic[4] = {'M', 'H', 'D', 'B'};
constexpr double kHermitianTolerance = 1e-10;

class Writer {
public:
    explicit Writer(std::vector<std::byte>& out) : out_(out) {}
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::byte>((v >> (8 * i)) & 0xffu));
    }
    void f64(double v) {
        const auto bits = std::bit_cast<std::uint64_t>(v);
        for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::byte>((bits >> (8 * i)) & 0xffu));
    }

private:
    std::vector<std::byte>& out_;
};

class Reader {
public:
    explicit Reader(std::span<const std::byte> in) : in_(in) {}
    std::uint32_t u32() { return static_cast<std::uint32_t>(take(4)); }
    double f64() { return std::bit_cast<double>(take(8)); }

private:
    std::uint64_t take(int bytes) {
        std::uint64_t v = 0;
        for (int i = 0; i < bytes; ++i) v |= std::to_integer<std::uint64_t>(in_[pos_ + static_cast<std::size_t>(i)]) << (8 * i);
        pos_ += static_cast<std::size_t>(bytes);
        return v;
    }
    std::span<const std::byte> in_;
    std::size_t pos_ = 0;
};

// File order runs every axis from -n/2 upward; memory order is FFT order.
template <class F>
void for_each_file_mode(int n, F&& fn) {
    for (int k1 = -n / 2; k1 < n / 2; ++k1)
        for (int k2 = -n / 2; k2 < n / 2; ++k2)
            for (int k3 = -n / 2; k3 < n / 2; ++k3) fn(k1, k2, k3);
}

}  // namespace

std::vector<std::byte> encode_snapshot(const State& state, const Params& params) {
    const int n = state.resolution();
    require_valid_resolution(n);
    std::vector<std::byte> out;
    out.reserve(kSnapshotHeaderBytes + kSnapshotFieldCount * static_cast<std::size_t>(n) * n * n * 16);
    for (char c : kMagic) out.push_back(static_cast<std::byte>(c));
    Writer w(out);
    w.u32(kSnapshotVersion);
    w.u32(static_cast<std::uint32_t>(n));
    w.u32(static_cast<std::uint32_t>(params.cutoff));
    w.f64(state.t);
    w.f64(params.nu);
    w.f64(params.eta);
    w.f64(params.kappa);
    w.f64(params.g);
    w.u32(kSnapshotFieldCount);
    for (const SpectralField* f : state.fields())
        for_each_file_mode(n, [&](int k1, int k2, int k3) {
            const Complex z = (*f)(k1, k2, k3);
            w.f64(z.real());
            w.f64(z.imag());
        });
    return out;
}

Snapshot decode_snapshot(std::span<const std::byte> bytes) {
    if (bytes.size() < kSnapshotHeaderBytes) throw FormatError("snapshot: truncated header");
    if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw FormatError("snapshot: bad magic");
    Reader r(bytes.subspan(4));
    Snapshot s;
    SnapshotHeader& h = s.header;
    h.version = r.u32();
    if (h.version != kSnapshotVersion)
        throw FormatError("snapshot: unsupported version " + std::to_string(h.version));
    h.n = r.u32();
    h.cutoff = r.u32();
    h.t = r.f64();
    h.nu = r.f64();
    h.eta = r.f64();
    h.kappa = r.f64();
    h.g = r.f64();
    h.field_count = r.u32();
    if (h.field_count != kSnapshotFieldCount)
        throw FormatError("snapshot: expected 7 fields, found " + std::to_string(h.field_count));
    if (h.n < 4 || h.n % 2 != 0 || h.n > 4096) throw FormatError("snapshot: invalid resolution " + std::to_string(h.n));
    if (h.cutoff > h.n / 2 - 1) throw FormatError("snapshot: cutoff exceeds resolution");

    const int n = static_cast<int>(h.n);
    const std::size_t expected = kSnapshotHeaderBytes + kSnapshotFieldCount * static_cast<std::size_t>(n) * n * n * 16;
    if (bytes.size() != expected)
        throw FormatError("snapshot: payload has " + std::to_string(bytes.size()) + " bytes, expected " +
                          std::to_string(expected));

    s.state = State(n);
    s.state.t = h.t;
    Reader payload(bytes.subspan(kSnapshotHeaderBytes));
    for (SpectralField* f : s.state.fields()) {
        for_each_file_mode(n, [&](int k1, int k2, int k3) {
            const double re = payload.f64();
            const double im = payload.f64();
            (*f)(k1, k2, k3) = Complex{re, im};
        });
        const double defect = hermitian_defect(*f);
        if (!(defect <= kHermitianTolerance))
            throw DataCorruptionError("snapshot: field is not Hermitian (relative defect " + std::to_string(defect) + ")");
    }
    return s;
}

void write_snapshot(const State& state, const Params& params, const std::filesystem::path& path) {
    const auto bytes = encode_snapshot(state, params);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("snapshot: cannot open '" + path.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw FormatError("snapshot: write to '" + path.string() + "' failed");
}

Snapshot read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("snapshot: cannot open '" + path.string() + "'");
    std::vector<char> raw{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return decode_snapshot(std::as_bytes(std::span<const char>(raw)));
}

}  // namespace mhdb
