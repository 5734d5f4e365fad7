#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsch {

/// Raised when a spectral solve misses its residual tolerance or a step
/// produces an inconsistent state.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what, std::int64_t step = -1)
      : std::runtime_error(step >= 0 ? what + " (step " + std::to_string(step) + ")" : what),
        step_(step) {}

  std::int64_t step() const noexcept { return step_; }

 private:
  std::int64_t step_;
};

/// NaN or Inf detected in a field.
class NonFiniteError : public SolverError {
 public:
  using SolverError::SolverError;
};

class UnknownCaseError : public std::invalid_argument {
 public:
  explicit UnknownCaseError(const std::string& name)
      : std::invalid_argument("unknown case '" + name + "'") {}
};

}  // namespace nsch
