#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hallq {

enum class ErrorKind {
  NonPrime,
  FieldTooLarge,
  NoIrreducibleFound,
  DivisionByZero,
  HasLoop,
  NotEquivariant,
  NotAdmissible,
  NotInvariant,
  DimensionMismatch,
  GradingMismatch,
  SpaceTooLarge,
  NonExactDivision,
  MissingOrbitTable,
  MissingHallTable,
  NonIntegerExtCount,
  NegativeExt,
  NonIntegerCartan,
  ParseError,
  ChecksumMismatch,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this one exception type; the
// kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hallq
