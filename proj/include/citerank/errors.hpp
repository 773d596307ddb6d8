#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace citerank {

// Input-side failures: bad files, malformed corpora, unknown names. The CLI
// maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IngestError : public InputError {
 public:
  using InputError::InputError;
};

class LookupError : public InputError {
 public:
  using InputError::InputError;
};

class DomainError : public InputError {
 public:
  using InputError::InputError;
};

class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

// Computation-side failures. The CLI maps these to exit code 1.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public ComputationError {
 public:
  ConvergenceError(const std::string& what, double residual, std::size_t iterations)
      : ComputationError(what), residual_(residual), iterations_(iterations) {}

  double residual() const noexcept { return residual_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  std::size_t iterations_;
};

class DegenerateInputError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace citerank
