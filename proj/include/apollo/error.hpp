#pragma once

#include <stdexcept>
#include <string>

namespace apollo {

enum class ErrorKind {
  DivisionByZero,
  ZeroRadius,
  NonUnitNormal,
  InvalidSymbol,
  CenterSingularity,
  NotRepresentable,
  InvalidQuadruple,
  NotTangentEnough,
  UnknownSeed,
  InvalidSeed,
  InvalidConfig,
  Inconclusive,
  EmptyPacking,
  ParseError,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace apollo
