#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pwell {

// Base of every error raised by the library. The CLI maps the two families
// below onto distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: configuration, parameter regime, theorem hypotheses.
class InputError : public Error {
 public:
  using Error::Error;
};

// Something went wrong inside a numerical procedure.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

class DomainError : public InputError {
 public:
  using InputError::InputError;
};

class HypothesisError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// Carries every failed clause so callers can report them all at once.
class ValidationError : public InputError {
 public:
  explicit ValidationError(std::vector<std::string> clauses);

  const std::vector<std::string>& clauses() const noexcept { return clauses_; }

 private:
  std::vector<std::string> clauses_;
};

class ProjectionError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class EstimationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace pwell
