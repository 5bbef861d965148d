#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cqs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments from the caller. The CLI maps these to exit code 1.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an otherwise well-posed operation.
class DomainError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A monomial does not lie in the expected class lattice.
class ClassMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ContainmentError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Two independent routes to the same quantity disagreed. Exit code 2.
class RouteMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace cqs
