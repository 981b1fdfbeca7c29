#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilbert {

/// Base class for every error raised by the library. The CLI maps the
/// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary series operation on operands truncated at different orders.
class OrderMismatchError : public Error {
 public:
  using Error::Error;
};

/// Power-series inversion of a polynomial whose constant term is not a unit.
class NonInvertibleError : public Error {
 public:
  using Error::Error;
};

/// A rational function that has no integer power-series expansion.
class NonIntegralError : public Error {
 public:
  using Error::Error;
};

/// Out-of-range parameters in a series spec, construction spec or option set.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

/// A prescribed coefficient exceeds the number of available monomials.
class CapacityError : public Error {
 public:
  CapacityError(std::size_t degree, const std::string& requested, const std::string& bound)
      : Error("capacity exceeded at degree " + std::to_string(degree) + ": requested " +
              requested + " monomials, at most " + bound + " exist"),
        degree_(degree) {}

  std::size_t degree() const noexcept { return degree_; }

 private:
  std::size_t degree_;
};

/// Malformed text input (word, presentation, polynomial or coefficient file).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Work or memory estimate above a configured guard.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// Operation requested on a construction variant that does not support it.
class UnsupportedVariantError : public Error {
 public:
  using Error::Error;
};

/// Too few coefficients for the requested analysis.
class DataShortageError : public Error {
 public:
  using Error::Error;
};

/// Forbidden-word set containing the empty word.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

}  // namespace hilbert
