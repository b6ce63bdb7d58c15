#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed braid-word or twist-word text. `position` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands live in braid groups on different strand counts.
class StrandMismatch : public Error {
 public:
  StrandMismatch(int a, int b)
      : Error("strand count mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// An argument violates a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A search gave up before reaching a verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Integer arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace braidforge
