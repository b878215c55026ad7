#pragma once

#include <stdexcept>
#include <string>

namespace mforge {

// Invalid argument values or misuse of an interface (maps to CLI exit 2).
struct ParameterError : std::invalid_argument {
  explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Loss of numeric validity: NaN/Inf, degenerate inputs, failed convergence
// (maps to CLI exit 3).
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// File system / parse failures (maps to CLI exit 4).
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input exceeds a configured size cap (maps to CLI exit 2).
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mforge
