#pragma once

#include <stdexcept>
#include <string>

namespace coxshadow {

// Unknown type tag or otherwise unsupported configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed user input (out-of-range letter, bad index, ...).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A violated operation precondition (non-dominant weight, wrong variant, ...).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace coxshadow
