#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diverse {

/// Base class for all data-driven failures raised by this library.
/// Programming errors (violated call contracts) throw std::invalid_argument
/// instead and are not meant to be caught in normal operation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text; carries the 1-based line number it was found on.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a domain invariant (duplicate id,
/// non-positive score, unknown candidate reference, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Jaccard distance requested for a pair of sets with an empty union.
class UndefinedDistanceError : public Error {
 public:
  using Error::Error;
};

/// Two-sample test input from which no test statistic can be formed.
class DegenerateSamplesError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search refused because the subset count exceeds the guard.
class InstanceTooLargeError : public Error {
 public:
  using Error::Error;
};

}  // namespace diverse
