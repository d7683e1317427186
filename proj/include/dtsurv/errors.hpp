#ifndef DTSURV_ERRORS_HPP
#define DTSURV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dtsurv {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument values (non-finite inputs, indices out of range, ...).
struct InvalidInputError : Error {
  using Error::Error;
};

// Parameter/covariate dimensions disagree with the model specification.
struct SpecError : Error {
  using Error::Error;
};

// Observed data violate a structural invariant (inconsistent test
// history, malformed person series, ...). Maps to CLI exit code 3.
struct DataError : Error {
  using Error::Error;
};

// Config file schema violations. Maps to CLI exit code 2.
struct ConfigError : Error {
  using Error::Error;
};

// Non-finite values or other numerical failures during inference.
struct NumericalError : Error {
  using Error::Error;
};

// The observed information matrix is singular or indefinite.
struct SingularInformationError : NumericalError {
  using NumericalError::NumericalError;
};

// Every replicate of a simulation study failed to converge.
struct StudyError : Error {
  using Error::Error;
};

}  // namespace dtsurv

#endif
