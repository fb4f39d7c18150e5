#pragma once

#include <stdexcept>
#include <string>

namespace sliosp {

enum class ErrorKind {
  InvalidExponent,
  InvalidIndex,
  NonFiniteInput,
  DomainError,
  UnsupportedExponent,
  RadicandNonpositive,
  ToleranceNotMet,
  BracketFailure,
  NoConvergence,
  ConservationViolated,
  BoundaryMiss,
};

/// Library-wide exception.  invalid_input() distinguishes malformed problem
/// data (CLI exit code 2) from numerical nonconvergence (exit code 3).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  bool invalid_input() const noexcept {
    switch (kind_) {
      case ErrorKind::InvalidExponent:
      case ErrorKind::InvalidIndex:
      case ErrorKind::NonFiniteInput:
      case ErrorKind::DomainError:
      case ErrorKind::UnsupportedExponent:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

}  // namespace sliosp
