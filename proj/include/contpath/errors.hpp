// Copyright 2026 contpath contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef CONTPATH_ERRORS_HPP
#define CONTPATH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace contpath {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Configuration / argument validation (CLI exit code 2).
struct InvalidParam : Error {
  using Error::Error;
};

struct InvalidArchitecture : InvalidParam {
  using InvalidParam::InvalidParam;
};

struct InvalidTour : InvalidParam {
  using InvalidParam::InvalidParam;
};

struct DegenerateInstance : InvalidParam {
  using InvalidParam::InvalidParam;
};

struct DomainError : InvalidParam {
  using InvalidParam::InvalidParam;
};

// Numerical failures (CLI exit code 3).
struct NumericError : Error {
  using Error::Error;
};

// Ackley's gradient is undefined at the origin; optimizers treat reaching it
// as convergence.
struct SingularGradient : NumericError {
  using NumericError::NumericError;
};

// Requested an analytic form that does not exist (e.g. closed-form Gaussian
// smoothing of Ackley).
struct UnsupportedProblem : Error {
  using Error::Error;
};

// An iterate left the finite domain. Carries the last finite point so the
// caller can report it.
struct NonFiniteIterate : NumericError {
  explicit NonFiniteIterate(std::vector<double> last_finite_point)
      : NumericError("iterate diverged to a non-finite value"),
        last_finite(std::move(last_finite_point)) {}
  std::vector<double> last_finite;
};

struct NonFiniteLoss : NumericError {
  using NumericError::NumericError;
};

struct BudgetExhausted : Error {
  using Error::Error;
};

// Model document parsing failure; message names the offending line/field.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace contpath

#endif  // CONTPATH_ERRORS_HPP
