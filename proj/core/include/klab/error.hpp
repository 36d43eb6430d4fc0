#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace klab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched shapes: variable counts, ranks, fields.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// An argument outside its documented range.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (e.g. an image element that does not
/// lift through the kernel). Indicates a bug upstream.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace klab
