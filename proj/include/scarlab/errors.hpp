#pragma once

#include <stdexcept>

namespace scarlab {

/// Invalid configuration or input (bad flags, malformed files, violated
/// preconditions); the CLI maps this to exit code 2.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dense eigensolver failure or internal numerical inconsistency; the CLI
/// maps this to exit code 3.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace scarlab
