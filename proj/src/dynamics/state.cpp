#include "mhdb/dynamics/state.hpp"

#include <algorithm>

namespace mhdb {

std::array<SpectralField*, 7> State::fields() noexcept {
    return {&u[0], &u[1], &u[2], &b[0], &b[1], &b[2], &theta};
}

std::array<const SpectralField*, 7> State::fields() const noexcept {
    return {&u[0], &u[1], &u[2], &b[0], &b[1], &b[2], &theta};
}

std::array<SpectralField*, 7> Tendency::fields() noexcept {
    return {&du[0], &du[1], &du[2], &db[0], &db[1], &db[2], &dtheta};
}

std::array<const SpectralField*, 7> Tendency::fields() const noexcept {
    return {&du[0], &du[1], &du[2], &db[0], &db[1], &db[2], &dtheta};
}

State resample(const State& state, int n) {
    State out(n);
    out.t = state.t;
    const int src_n = state.resolution();
    // Only wavenumbers representable on both grids without touching either Nyquist plane.
    const int kmax = std::min(src_n, n) / 2 - 1;
    const auto src = state.fields();
    const auto dst = out.fields();
    for (std::size_t c = 0; c < src.size(); ++c)
        for (int k1 = -kmax; k1 <= kmax; ++k1)
            for (int k2 = -kmax; k2 <= kmax; ++k2)
                for (int k3 = -kmax; k3 <= kmax; ++k3) (*dst[c])(k1, k2, k3) = (*src[c])(k1, k2, k3);
    return out;
}

}  // namespace mhdb
