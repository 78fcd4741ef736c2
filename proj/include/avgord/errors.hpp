#pragma once

#include <stdexcept>
#include <string>

namespace avgord {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group, lattice or search exceeded a configured cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A theorem that must hold on valid input was contradicted by a computation.
/// Reported as data by the census; on valid input it indicates a bug.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed catalog or report text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace avgord
