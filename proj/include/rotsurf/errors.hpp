#pragma once

#include <stdexcept>
#include <string>

namespace rotsurf {

// Base class for every failure the library reports.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, unknown family, missing or out-of-range
// parameters, non-uniform sample tables.
struct InvalidInputError : Error {
  using Error::Error;
};

// Evaluation point outside the declared parameter domain.
struct DomainError : Error {
  using Error::Error;
};

// A geometric admissibility condition fails: non-positive rotation radius,
// degenerate normal frame, profile speed crossing a lightlike direction.
struct AdmissibilityError : Error {
  using Error::Error;
};

// A finite-difference step does not fit inside the domain at the requested
// point, or is incompatible with a sampled curve's node spacing.
struct StepError : Error {
  using Error::Error;
};

// The classifier received fewer usable samples than the fit requires.
struct InsufficientSamplesError : Error {
  using Error::Error;
};

}  // namespace rotsurf
