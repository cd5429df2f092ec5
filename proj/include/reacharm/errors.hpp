#pragma once

#include <stdexcept>
#include <string>

namespace reacharm {

/// Simulation state left the sane range (used as an instability signal by
/// the gain tuner, and mapped to a terminal failure by the environment).
struct NumericalBlowup : std::runtime_error {
    explicit NumericalBlowup(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Workspace construction removed every candidate tip point.
struct EmptyWorkspace : std::runtime_error {
    explicit EmptyWorkspace(const std::string& what) : std::runtime_error(what) {}
};

/// A training loss went non-finite; training aborts after checkpointing.
struct DivergenceDetected : std::runtime_error {
    explicit DivergenceDetected(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace reacharm
