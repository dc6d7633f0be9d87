#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netemd {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Argument outside an operation's precondition.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Node or graph index outside the valid range.
class IndexError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A random-graph model could not be tuned to the requested average degree.
class CalibrationError : public Error {
 public:
  using Error::Error;
};

/// Eigensolver or integrator produced values outside their valid range.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace netemd
