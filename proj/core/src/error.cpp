#include "effvec/error.hpp"

namespace effvec {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorKind::NonUnitDiagonal: return "NonUnitDiagonal";
    case ErrorKind::ReciprocityViolation: return "ReciprocityViolation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyIndexSet: return "EmptyIndexSet";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SeedNotEfficient: return "SeedNotEfficient";
    case ErrorKind::OutOfInterval: return "OutOfInterval";
    case ErrorKind::BadSeedSize: return "BadSeedSize";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::BadConfig: return "BadConfig";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace effvec
