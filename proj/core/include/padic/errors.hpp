#pragma once

#include <stdexcept>
#include <string>

namespace padic {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by an exact zero.
class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// The requested answer is not determined by the digits at hand.
/// Raised instead of guessing; callers may retry at higher precision.
class InsufficientPrecision : public Error {
 public:
  explicit InsufficientPrecision(const std::string& what) : Error(what) {}
};

/// Root extraction target is not a 1-unit (valuation 0, residue 1 mod p).
class NotOneUnit : public Error {
 public:
  explicit NotOneUnit(const std::string& what) : Error(what) {}
};

/// Root exponent q is unsupported (q == p or q not prime).
class UnsupportedExponent : public Error {
 public:
  explicit UnsupportedExponent(const std::string& what) : Error(what) {}
};

/// Approximation target outside the supported class.
class UnsupportedTarget : public Error {
 public:
  explicit UnsupportedTarget(const std::string& what) : Error(what) {}
};

/// ord search window exhausted without a decision.
class WindowExceeded : public Error {
 public:
  explicit WindowExceeded(const std::string& what) : Error(what) {}
};

/// Operands live on different spaces or over different primes.
class SpaceMismatch : public Error {
 public:
  explicit SpaceMismatch(const std::string& what) : Error(what) {}
};

/// Malformed literal or file; the message names the line/field.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace padic
