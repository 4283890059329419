#pragma once

#include <stdexcept>
#include <string>

namespace xxness {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Model parameters outside their validity domain.
struct InvalidParamsError : Error {
  using Error::Error;
};

// Adaptive quadrature failed to reach the requested tolerance.
struct QuadratureError : Error {
  using Error::Error;
};

// Root bracketing failed (no sign change on the search interval).
struct NoRootError : Error {
  using Error::Error;
};

// Requested chain size exceeds the configured superoperator limit.
struct SizeLimitError : Error {
  using Error::Error;
};

// Steady-state solve did not produce an acceptable solution.
struct SolveError : Error {
  using Error::Error;
};

// More than one steady state detected.
struct DegenerateSteadyStateError : SolveError {
  using SolveError::SolveError;
};

}  // namespace xxness
