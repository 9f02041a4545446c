#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdim {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Bad user input: malformed knot parameters, words, flags. Maps to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        detail_(what),
        position_(position) {}

  const std::string& detail() const noexcept { return detail_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string detail_;
  std::size_t position_;
};

// A search or construction would exceed a configured bound. Maps to exit code 2.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An element that does not belong to the group it is used with.
class MembershipError : public Error {
 public:
  using Error::Error;
};

// A precondition on a verified object does not hold (e.g. a relator is not killed).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The image of a word is expected to be a pure translation but is not.
class NotATranslationError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Internal consistency failure. Certificates must never be issued past one.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace qdim
