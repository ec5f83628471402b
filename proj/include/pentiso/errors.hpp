#pragma once

#include <stdexcept>
#include <string>

namespace pentiso {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class InfeasibleEdgeError : public InfeasibleError {
 public:
  using InfeasibleError::InfeasibleError;
};

// The infimum sits on the open boundary (an angle of 0 or pi).
class UnboundedError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class InconsistentScenarioError : public Error {
 public:
  using Error::Error;
};

// A derivation step that is not an exact nonnegative combination of the
// steps it cites.
class NonSequiturError : public Error {
 public:
  NonSequiturError(std::size_t step, const std::string& what)
      : Error("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

class PatchError : public Error {
 public:
  using Error::Error;
};

class MalformedMeshError : public Error {
 public:
  using Error::Error;
};

class UnknownClaimError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pentiso
