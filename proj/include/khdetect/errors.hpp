#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace khdetect {

// Input-side failures (bad codes, bad files, bad parameters). The CLI maps
// these to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal or resource failures. CLI exit code 1.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : InputError {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : InputError(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct InvalidCharacter : InputError {
  using InputError::InputError;
};

struct InvalidDT : InputError {
  using InputError::InputError;
};

struct TooManyCrossings : InputError {
  using InputError::InputError;
};

struct InvalidGauss : InputError {
  using InputError::InputError;
};

struct NonRealizable : InputError {
  using InputError::InputError;
};

struct NotDivisible : InternalError {
  using InternalError::InternalError;
};

struct InvalidParameters : InputError {
  using InputError::InputError;
};

struct ResourceLimitExceeded : InternalError {
  using InternalError::InternalError;
};

struct IoError : InputError {
  using InputError::InputError;
};

struct FormatError : InputError {
  std::size_t line;
  FormatError(const std::string& msg, std::size_t line_no)
      : InputError(msg + " (line " + std::to_string(line_no) + ")"),
        line(line_no) {}
};

struct MissingInvariant : InputError {
  using InputError::InputError;
};

}  // namespace khdetect
