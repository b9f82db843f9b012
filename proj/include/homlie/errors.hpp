#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace homlie {

enum class ErrorKind {
  DivisionByZero,
  PoleAtPoint,
  ParseError,
  ShapeMismatch,
  Singular,
  NotAMorphism,
  NotAnAutomorphism,
  NotMultiplicative,
  NotSemisimple,
  AxiomFailure,
  CompatibilityFailure,
  NoInvertibleSolution,
  InvalidParams,
  Incomplete,
  NotCommuting,
  Unsupported,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this type; `kind()` is the
/// machine-readable category, `what()` carries the witness in prose.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(to_string(kind)) + ": " + message);
}

}  // namespace homlie
