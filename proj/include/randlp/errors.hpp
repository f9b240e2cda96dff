#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace randlp {

/// Raised when a geometric operation receives a degenerate input, e.g. an
/// inequality whose coefficient vector has zero norm.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by operations that only support particular dimensions
/// (the vertex oracle for n <= 3, the SVG renderer for n == 2).
class UnsupportedDimension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a generator is invoked with parameters that fail
/// validate_params(). The message lists every violation.
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace randlp
