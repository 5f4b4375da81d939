#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace effvec {

enum class ErrorKind {
  NotSquare,
  BadDimension,
  NonPositiveEntry,
  NonUnitDiagonal,
  ReciprocityViolation,
  DimensionMismatch,
  EmptyIndexSet,
  IndexOutOfRange,
  ParseError,
  SeedNotEfficient,
  OutOfInterval,
  BadSeedSize,
  DimensionTooLarge,
  NoConvergence,
  BadRange,
  BadConfig,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Numeric context attached to an error. Matrix and vector positions are
/// reported 1-based so that messages line up with the input files.
struct ErrorDetail {
  std::string key;
  double value;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<ErrorDetail> details = {})
      : std::runtime_error(message), kind_(kind), details_(std::move(details)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<ErrorDetail>& details() const noexcept { return details_; }

 private:
  ErrorKind kind_;
  std::vector<ErrorDetail> details_;
};

}  // namespace effvec
