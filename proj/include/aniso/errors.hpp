#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aniso {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateSimplex : public Error {
 public:
  using Error::Error;
};

/// Raised when the orthogonal factor of the two-step map is not orthogonal,
/// which means the vertices were not labeled consistently.
class FactorizationFailure : public Error {
 public:
  using Error::Error;
};

class UnsupportedDegree : public Error {
 public:
  using Error::Error;
};

class WrongDimension : public Error {
 public:
  using Error::Error;
};

class UnsupportedKind : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

class SingularGram : public Error {
 public:
  using Error::Error;
};

class MissingDerivative : public Error {
 public:
  using Error::Error;
};

class InvalidN : public Error {
 public:
  using Error::Error;
};

class NonConformal : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace aniso
