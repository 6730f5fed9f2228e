#pragma once

#include <stdexcept>
#include <string>

namespace mhdb {

/// Invalid parameters, configuration keys or API arguments.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& key, const std::string& message)
        : std::runtime_error(key.empty() ? message : key + ": " + message), key_(key) {}
    explicit ConfigError(const std::string& message) : ConfigError("", message) {}

    /// Offending configuration key, empty when the error is not tied to one.
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// A caller broke a documented precondition (e.g. a non-solenoidal input).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Coefficient data that cannot represent a real field.
class DataCorruptionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or incompatible snapshot / timeseries file.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when the solution becomes non-finite or exceeds the gradient ceiling.
class BlowUpError : public std::runtime_error {
public:
    BlowUpError(double t, double grad_u_norm, double energy, const std::string& reason)
        : std::runtime_error("blow-up at t=" + std::to_string(t) + ": " + reason),
          t_(t), grad_u_norm_(grad_u_norm), energy_(energy) {}

    double time() const noexcept { return t_; }
    double grad_u_norm() const noexcept { return grad_u_norm_; }
    double energy() const noexcept { return energy_; }

private:
    double t_;
    double grad_u_norm_;
    double energy_;
};

}  // namespace mhdb
