#pragma once

#include <stdexcept>
#include <string>

namespace apcsldg {

// Bad scheme/mesh/scenario parameters detected before any computation.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid numerical input (non-finite samples, negative distributions, ...).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Elliptic or eigenvalue solve failed (singular operator, sign change, ...).
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace apcsldg
