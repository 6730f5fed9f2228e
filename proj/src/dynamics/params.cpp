#include "mhdb/dynamics/params.hpp"

#include <cmath>
#include <string>

#include "mhdb/errors.hpp"
#include "mhdb/spectral/calculus.hpp"

namespace mhdb {
namespace {

void require_nonnegative(double value, const char* key) {
    if (!std::isfinite(value) || value < 0.0)
        throw ConfigError(key, "must be finite and >= 0, got " + std::to_string(value));
}

void require_positive(double value, const char* key) {
    if (!std::isfinite(value) || value <= 0.0)
        throw ConfigError(key, "must be finite and > 0, got " + std::to_string(value));
}

}  // namespace

void Params::validate() const {
    require_nonnegative(nu, "nu");
    require_nonnegative(eta, "eta");
    require_nonnegative(kappa, "kappa");
    // g = 0 is allowed: the conservation checks run with buoyancy switched off.
    require_nonnegative(g, "g");
    if (n <= 0 || n % 2 != 0) throw ConfigError("N", "must be a positive even integer, got " + std::to_string(n));
    const int band = dealias_cutoff(n);
    if (cutoff < 0 || cutoff > band)
        throw ConfigError("M", "cutoff " + std::to_string(cutoff) + " must lie in [0, " + std::to_string(band) +
                                   "] for N=" + std::to_string(n));
    require_positive(dt, "dt");
    require_positive(t_end, "t_end");
    require_positive(blowup_ceiling, "blowup_ceiling");
}

long Params::step_count() const {
    require_positive(dt, "dt");
    const double ratio = t_end / dt;
    const long steps = std::lround(ratio);
    if (steps < 1 || std::abs(ratio - static_cast<double>(steps)) > 1e-9 * ratio)
        throw ConfigError("dt", "t_end must be a positive integer multiple of dt");
    return steps;
}

}  // namespace mhdb
