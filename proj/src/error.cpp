#include "hallq/error.hpp"

namespace hallq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::NoIrreducibleFound: return "NoIrreducibleFound";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::HasLoop: return "HasLoop";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::GradingMismatch: return "GradingMismatch";
    case ErrorKind::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorKind::NonExactDivision: return "NonExactDivision";
    case ErrorKind::MissingOrbitTable: return "MissingOrbitTable";
    case ErrorKind::MissingHallTable: return "MissingHallTable";
    case ErrorKind::NonIntegerExtCount: return "NonIntegerExtCount";
    case ErrorKind::NegativeExt: return "NegativeExt";
    case ErrorKind::NonIntegerCartan: return "NonIntegerCartan";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ChecksumMismatch: return "ChecksumMismatch";
  }
  return "Unknown";
}

}  // namespace hallq
