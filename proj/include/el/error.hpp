#pragma once

#include <stdexcept>
#include <string>

namespace el {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text, with the byte offset where parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A computation hit its configured step, term, or time limit. Never a wrong answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Operands from different rings or fields.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A randomized choice was not generic enough and retries ran out.
class GenericityFailure : public Error {
 public:
  using Error::Error;
};

/// A precondition on the input was violated.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace el
