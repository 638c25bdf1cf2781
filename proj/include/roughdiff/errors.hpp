#pragma once

#include <stdexcept>
#include <string>

namespace roughdiff {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the function's domain (point outside the interval,
/// mismatched intervals, support leaving the grid, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Result not expressible in the closed representation (degree cap
/// exceeded, reciprocal of a non-constant piece, ...).
class RepresentationError : public Error {
public:
  using Error::Error;
};

/// Degenerate coefficient: zero mass, or a vanishing lower bound where a
/// strictly positive one is required.
class DegeneracyError : public Error {
public:
  using Error::Error;
};

/// A stated precondition does not hold (coefficient not in the admissible
/// class, shift outside the resolvent interval, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Caller misuse: empty probe/sweep lists, invalid indices.
class UsageError : public Error {
public:
  using Error::Error;
};

/// Numerical failure: iteration limit, singular system, lost positive
/// definiteness.
class NumericalError : public Error {
public:
  using Error::Error;
};

}  // namespace roughdiff
