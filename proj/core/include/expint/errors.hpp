#pragma once

#include <stdexcept>

namespace expint {

// Base class for everything this library throws, so callers can catch one
// type.  Budget exhaustion inside iterative kernels is not an exception: it
// is reported through the converged flag on QuadResult / SeriesResult.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of the requested function or integral.
struct DomainError : Error {
  using Error::Error;
};

// integrate_pv called with the pole outside the open interval (a, b).
struct PoleOutsideRange : DomainError {
  using DomainError::DomainError;
};

// Prime-table query beyond the sieved limit.
struct OutOfRange : DomainError {
  using DomainError::DomainError;
};

// Sieve limit above the supported cap.
struct LimitTooLarge : DomainError {
  using DomainError::DomainError;
};

// An iteration that has no partial result to hand back failed to settle.
struct NonConvergence : Error {
  using Error::Error;
};

// No evaluation route could meet the requested tolerance.
struct AccuracyLoss : Error {
  using Error::Error;
};

// Semi-infinite integrand does not decay (or oscillation fails to damp).
struct DivergentTail : Error {
  using Error::Error;
};

// Result magnitude exceeds double range and no scaled form was requested.
struct Overflow : Error {
  using Error::Error;
};

// Root finder saw no sign change over its scan interval.
struct RootNotBracketed : Error {
  using Error::Error;
};

// CLI was asked for a function name it does not know.
struct UnknownFunction : Error {
  using Error::Error;
};

}  // namespace expint
