#pragma once

#include <stdexcept>
#include <string>

namespace hvac {

// Base for every error raised by this project.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition (bad action range, wrong counts).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Invalid building / run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. `row` is 1-based for line oriented formats, 0 if n/a.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t row = 0)
      : Error(row ? what + " (row " + std::to_string(row) + ")" : what), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

// NaN/Inf encountered during training.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

}  // namespace hvac
