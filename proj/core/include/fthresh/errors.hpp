#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fthresh {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial text or session document. `position` is a byte offset
// into the source text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Operands live in different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (non m-primary target, q not a
// power of p, zero divisor ideal, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace fthresh
