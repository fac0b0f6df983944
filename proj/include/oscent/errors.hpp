#pragma once

#include <stdexcept>
#include <string>

namespace oscent {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An integral or constant that does not exist for the requested parameters.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A numerical procedure failed to reach its tolerance. Carries the best
// estimate available and its error bound.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double estimate, double error_bound)
      : Error(what + " (estimate " + std::to_string(estimate) + ", error bound " +
              std::to_string(error_bound) + ")"),
        estimate_(estimate),
        error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

// An exact multi-sum exceeded the supported lattice.
class UnboundedGrowthError : public Error {
 public:
  using Error::Error;
};

}  // namespace oscent
