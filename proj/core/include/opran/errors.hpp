#pragma once

#include <stdexcept>
#include <string>

namespace opran {

// Base for everything this library throws deliberately.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-schema input (JSON fields, bad denominators, ...).
class ParseError : public Error {
public:
  using Error::Error;
};

// An operation was handed arguments that violate its stated contract
// (non-Hermitian where Hermitian is required, mismatched dimensions, ...).
class ContractError : public Error {
public:
  using Error::Error;
};

// A construction's mathematical precondition does not hold for the given
// input (enlargement inapplicable, not surjective, decision refuted where
// admission is required). Distinct from ContractError so callers can map it
// to a dedicated exit status.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// Not enough ambient dimensions to carry out a construction.
class HeadroomError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

// An iterative routine failed to converge within its cap.
class NumericError : public Error {
public:
  using Error::Error;
};

// Finite cardinal arithmetic left the native integer range.
class OverflowError : public Error {
public:
  using Error::Error;
};

}  // namespace opran
