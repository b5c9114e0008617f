#pragma once

#include <stdexcept>
#include <string>

namespace phi4 {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// K(m) requested at m = 1, where the quarter period diverges and callers
// must branch to the hyperbolic closed forms instead.
struct DivergentPeriod : DomainError {
  using DomainError::DomainError;
};

// Parameter struct does not belong to the requested model.
struct ParamModelMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnknownFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// SolveSpec whose fixed/free names are not a partition of the family's
// symbol set (or otherwise malformed).
struct InconsistentSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CrosscheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonConvergedRecord : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SerializationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContinuationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace phi4
