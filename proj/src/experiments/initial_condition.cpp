#include "mhdb/experiments/initial_condition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "mhdb/errors.hpp"
#include "mhdb/spectral/calculus.hpp"
#include "mhdb/spectral/transform.hpp"

namespace mhdb {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Coefficients on the cube |k|_inf <= radius, independent of any grid size, so
// that runs at different resolutions and cutoffs share their common modes bit for bit.
class Lattice {
public:
    Lattice(int radius, int components) : radius_(radius), side_(2 * radius + 1) {
        data_.assign(static_cast<std::size_t>(components),
                     std::vector<Complex>(static_cast<std::size_t>(side_) * side_ * side_));
    }

    int radius() const noexcept { return radius_; }
    Complex& at(int c, int k1, int k2, int k3) {
        return data_[static_cast<std::size_t>(c)][(static_cast<std::size_t>(k1 + radius_) * side_ + (k2 + radius_)) * side_ +
                                                  (k3 + radius_)];
    }

    double norm_squared(int first, int count) const {
        double s = 0.0;
        for (int c = first; c < first + count; ++c)
            for (const Complex& z : data_[static_cast<std::size_t>(c)]) s += std::norm(z);
        return s;
    }

    void scale(int first, int count, double factor) {
        for (int c = first; c < first + count; ++c)
            for (Complex& z : data_[static_cast<std::size_t>(c)]) z *= factor;
    }

    // Removes the component along k of the vector (c, c+1, c+2) mode by mode.
    void project(int first) {
        for (int k1 = -radius_; k1 <= radius_; ++k1)
            for (int k2 = -radius_; k2 <= radius_; ++k2)
                for (int k3 = -radius_; k3 <= radius_; ++k3) {
                    const double k2sum = k1 * k1 + k2 * k2 + k3 * k3;
                    if (k2sum == 0.0) continue;
                    Complex& a = at(first, k1, k2, k3);
                    Complex& b = at(first + 1, k1, k2, k3);
                    Complex& c = at(first + 2, k1, k2, k3);
                    const Complex s = (double(k1) * a + double(k2) * b + double(k3) * c) / k2sum;
                    a -= static_cast<double>(k1) * s;
                    b -= static_cast<double>(k2) * s;
                    c -= static_cast<double>(k3) * s;
                }
    }

    void copy_into(int c, SpectralField& f, int cutoff) {
        const int n = f.resolution();
        const int r = std::min({radius_, cutoff, n / 2 - 1});
        f.set_zero();
        for (int k1 = -r; k1 <= r; ++k1)
            for (int k2 = -r; k2 <= r; ++k2)
                for (int k3 = -r; k3 <= r; ++k3) f(k1, k2, k3) = at(c, k1, k2, k3);
    }

private:
    int radius_;
    int side_;
    std::vector<std::vector<Complex>> data_;
};

bool positive_half(int k1, int k2, int k3) {
    return k1 > 0 || (k1 == 0 && (k2 > 0 || (k2 == 0 && k3 > 0)));
}

// Uniform in [0, 1) from the top 53 bits; identical on every platform.
double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Lattice random_lattice(int radius, int components, double sigma, std::uint64_t seed) {
    Lattice lattice(radius, components);
    std::mt19937_64 rng(seed);
    for (int k1 = -radius; k1 <= radius; ++k1)
        for (int k2 = -radius; k2 <= radius; ++k2)
            for (int k3 = -radius; k3 <= radius; ++k3) {
                if (!positive_half(k1, k2, k3)) continue;
                const double amp = std::pow(1.0 + k1 * k1 + k2 * k2 + k3 * k3, -0.5 * sigma);
                for (int c = 0; c < components; ++c) {
                    const Complex z = std::polar(amp, kTwoPi * uniform(rng));
                    lattice.at(c, k1, k2, k3) = z;
                    lattice.at(c, -k1, -k2, -k3) = std::conj(z);
                }
            }
    return lattice;
}

void normalize(Lattice& lattice, int first, int count, double target) {
    const double norm = std::sqrt(lattice.norm_squared(first, count));
    lattice.scale(first, count, norm > 0.0 ? target / norm : 0.0);
}

template <class F>
SpectralField sample(int n, F&& fn) {
    RealGrid g(n);
    for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = 0; j2 < n; ++j2)
            for (int j3 = 0; j3 < n; ++j3)
                g(j1, j2, j3) = fn(kTwoPi * j1 / n, kTwoPi * j2 / n, kTwoPi * j3 / n);
    return forward_transform(g);
}

void finish(State& s, int cutoff) {
    for (SpectralField* f : s.fields()) galerkin_truncate_inplace(*f, cutoff);
    leray_project_inplace(s.u);
    leray_project_inplace(s.b);
    for (int i = 0; i < 3; ++i) {
        s.u[i](0, 0, 0) = Complex{};
        s.b[i](0, 0, 0) = Complex{};
    }
}

}  // namespace

bool is_known_preset(std::string_view name) {
    return name == "taylor-green" || name == "mhd-vortex" || name == "random-sobolev";
}

State make_initial_condition(const InitialCondition& ic, const Params& params) {
    if (!is_known_preset(ic.preset)) throw ConfigError("preset", "unknown preset '" + ic.preset + "'");
    params.validate();
    const int n = params.n;
    const double a = ic.amplitude;
    State s(n);

    if (ic.preset == "random-sobolev") {
        const int radius = ic.generation_cutoff.value_or(params.cutoff);
        if (radius < 0) throw ConfigError("generation_cutoff", "must be >= 0");
        const double theta_amp = ic.theta_amplitude.value_or(a);
        Lattice lattice = random_lattice(radius, 7, ic.sigma, params.seed);
        lattice.project(0);
        lattice.project(3);
        normalize(lattice, 0, 3, a);
        normalize(lattice, 3, 3, a);
        normalize(lattice, 6, 1, theta_amp);
        auto fields = s.fields();
        for (int c = 0; c < 7; ++c) lattice.copy_into(c, *fields[static_cast<std::size_t>(c)], params.cutoff);
        finish(s, params.cutoff);
        return s;
    }

    const double theta_amp = ic.theta_amplitude.value_or(0.0);
    if (ic.preset == "taylor-green") {
        s.u[0] = sample(n, [&](double x, double y, double z) { return a * std::sin(x) * std::cos(y) * std::cos(z); });
        s.u[1] = sample(n, [&](double x, double y, double z) { return -a * std::cos(x) * std::sin(y) * std::cos(z); });
    } else {
        s.u[0] = sample(n, [&](double, double, double z) { return a * std::sin(z); });
        s.u[1] = sample(n, [&](double x, double, double) { return a * std::sin(x); });
        s.u[2] = sample(n, [&](double, double y, double) { return a * std::sin(y); });
        s.b[0] = sample(n, [&](double, double y, double) { return a * std::cos(y); });
        s.b[1] = sample(n, [&](double, double, double z) { return a * std::cos(z); });
        s.b[2] = sample(n, [&](double x, double, double) { return a * std::cos(x); });
    }
    if (theta_amp != 0.0)
        s.theta = sample(n, [&](double x, double y, double z) { return theta_amp * std::cos(x) * std::cos(y) * std::sin(z); });
    finish(s, params.cutoff);
    return s;
}

VectorField random_solenoidal_field(int n, int cutoff, double sigma, std::uint64_t seed) {
    Lattice lattice = random_lattice(cutoff, 3, sigma, seed);
    lattice.project(0);
    normalize(lattice, 0, 3, 1.0);
    VectorField v(n);
    for (int c = 0; c < 3; ++c) lattice.copy_into(c, v[c], cutoff);
    return v;
}

SpectralField random_scalar_field(int n, int cutoff, double sigma, std::uint64_t seed) {
    Lattice lattice = random_lattice(cutoff, 1, sigma, seed);
    normalize(lattice, 0, 1, 1.0);
    SpectralField f(n);
    lattice.copy_into(0, f, cutoff);
    return f;
}

}  // namespace mhdb
