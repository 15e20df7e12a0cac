#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subsetfactor {

// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `position` is a 0-based column into the parsed string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A Cayley table or family parameter set that does not describe a group.
class InvalidGroup : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured size or work cap was hit before an answer was reached.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace subsetfactor
