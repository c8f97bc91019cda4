#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lldpd {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A requested moment is infinite for the given shape.
class MomentDoesNotExist : public DomainError {
 public:
  using DomainError::DomainError;
};

// Sample carries too little spread for the estimator (all equal, MAD = 0, ...).
class DegenerateSampleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Matrix that has to be inverted is singular or not positive definite.
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed number that is not admissible as data (x <= 0, NaN, ...).
class DataDomainError : public DomainError {
 public:
  DataDomainError(const std::string& what, std::size_t line)
      : DomainError(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lldpd
