#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grt {

enum class ErrorCode {
  Parse,
  UnknownGenerator,
  AlphabetMismatch,
  AtomicWord,
  NotALiePolynomial,
  NotHomogeneous,
  Precondition,
  NotOneDimensional,
  DegenerateLeadingTerm,
  MixedDegrees,
  ClassMismatch,
  Unsupported,
  Internal,
};

const char* to_string(ErrorCode code);

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error in a Lie expression or group word; `position` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::Parse,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace grt
