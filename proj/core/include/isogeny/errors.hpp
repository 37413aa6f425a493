#pragma once

#include <stdexcept>
#include <string>

namespace isogeny {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: the request itself cannot be honoured (exit code 1 in the CLI).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A computation failed to finish; the result would be incomplete (exit code 2).
class ComputationError : public Error {
 public:
  using Error::Error;
};

class InvalidD : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotSquarefree : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class CalledOnImaginary : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotSplit : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class AuxTooSmall : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Imaginary quadratic fields of class number one have infinitely many
/// isogeny primes (CM points), so no finite superset exists.
class ImaginaryClassNumberOne : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class FactorizationExhausted : public ComputationError {
 public:
  explicit FactorizationExhausted(std::string cofactor)
      : ComputationError("factorization budget exhausted on composite cofactor " + cofactor),
        cofactor_(std::move(cofactor)) {}
  const std::string& cofactor() const noexcept { return cofactor_; }

 private:
  std::string cofactor_;
};

class GeneratorSearchFailed : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class ZeroNormEncountered : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace isogeny
