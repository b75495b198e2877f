#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Base of every error raised by the library. Subclasses name the failing
// precondition so callers can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// b - a is not an integer (this includes unequal imaginary parts).
class NonIntegralDifference : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// lambdaL - lambdaR has a non-integral coordinate.
class NonIntegralWeight : public Error {
 public:
  using Error::Error;
};

class NegativeMu : public Error {
 public:
  using Error::Error;
};

class DimensionCap : public Error {
 public:
  using Error::Error;
};

// A generalized eigenspace was not stable under the embedded subalgebra.
class InvarianceViolation : public Error {
 public:
  using Error::Error;
};

// Eigenspace dimensions over the candidate set did not add up to the
// dimension of the space being split.
class CandidateSetIncomplete : public Error {
 public:
  using Error::Error;
};

}  // namespace hecke
