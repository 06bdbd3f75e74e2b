#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kratzer {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested energy is at or above the dissociation limit C.
class NoBoundState : public Error {
 public:
  using Error::Error;
};

/// The requested energy lies below the bottom of the effective potential.
class NoClassicalRegion : public Error {
 public:
  using Error::Error;
};

/// Quadrature or root finding did not reach the requested accuracy.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// The shooting oracle could not bracket a state with the requested nodes.
class StateNotFound : public Error {
 public:
  using Error::Error;
};

class CalibrationFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed or invalid input file. `field()` names the offending field
/// when one can be identified.
class InputError : public Error {
 public:
  InputError(const std::string& what, std::string field = {})
      : Error(what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace kratzer
