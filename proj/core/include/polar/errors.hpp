#pragma once

#include <stdexcept>
#include <string>

namespace polar {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a precondition a caller could have checked.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Syntax error in infix or SLP input; `offset` is a 0-based byte offset.
class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InvalidArgument(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// The input violates a standing geometric assumption (squarefree f,
/// finite critical set, radical ideal) or genericity could not be certified.
class AssumptionViolation : public Error {
 public:
  using Error::Error;
};

class NotSquarefree : public AssumptionViolation {
 public:
  NotSquarefree(const std::string& what, std::string witness)
      : AssumptionViolation(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

class PositiveDimensional : public AssumptionViolation {
 public:
  using AssumptionViolation::AssumptionViolation;
};

class NotRadical : public AssumptionViolation {
 public:
  using AssumptionViolation::AssumptionViolation;
};

class SeparationFailure : public AssumptionViolation {
 public:
  using AssumptionViolation::AssumptionViolation;
};

class RetryExhausted : public AssumptionViolation {
 public:
  RetryExhausted(const std::string& what, std::string last_certificate)
      : AssumptionViolation(what + ": " + last_certificate),
        last_certificate_(std::move(last_certificate)) {}
  const std::string& last_certificate() const noexcept {
    return last_certificate_;
  }

 private:
  std::string last_certificate_;
};

}  // namespace polar
