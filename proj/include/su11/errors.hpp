#pragma once

#include <stdexcept>
#include <string>

namespace su11 {

// Base of every exception thrown by the library. Domain errors (bad
// parameters) and numerical failures derive from it separately so callers
// can tell "wrong input" from "did not converge".
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

// Argument lands on a pole of the gamma function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// 2F1 argument cannot be brought inside the summation radius.
class UnsupportedArgument : public DomainError {
 public:
  using DomainError::DomainError;
};

// Lower 2F1/3F2 parameter hits a non-positive integer.
class DegenerateDenominator : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidRegime : public DomainError {
 public:
  using DomainError::DomainError;
};

class WindowError : public DomainError {
 public:
  using DomainError::DomainError;
};

class BoundaryError : public DomainError {
 public:
  using DomainError::DomainError;
};

class AnnulusError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class TailTooLarge : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace su11
