#pragma once

// Geometric means of column subsets.
//
// Subsets are encoded as n-bit patterns read left to right: the leftmost bit
// is column 1, so for n = 5 the pattern 01101 (index 13) selects columns
// 2, 3 and 5, and index 2^n - 1 selects every column.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "effvec/pcm.hpp"

namespace effvec {

inline constexpr std::size_t kMaxSweepDimension = 20;

class ColumnSubset {
 public:
  /// Errors: BadDimension (n == 0 or n > 63), IndexOutOfRange.
  static ColumnSubset from_index(std::uint64_t index, std::size_t n);
  /// 0-based columns; EmptyIndexSet / IndexOutOfRange.
  static ColumnSubset from_columns(const std::vector<std::size_t>& columns, std::size_t n);

  std::size_t dimension() const noexcept { return n_; }
  std::uint64_t index() const noexcept { return mask_; }
  bool contains(std::size_t column) const noexcept {
    return (mask_ >> (n_ - 1 - column)) & 1U;
  }
  std::size_t count() const noexcept;
  std::vector<std::size_t> columns() const;
  /// e.g. "01101".
  std::string bit_pattern() const;

  friend bool operator==(const ColumnSubset&, const ColumnSubset&) = default;

 private:
  ColumnSubset(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {}

  std::size_t n_;
  std::uint64_t mask_;
};

inline ColumnSubset subset_from_index(std::uint64_t index, std::size_t n) {
  return ColumnSubset::from_index(index, n);
}
inline std::uint64_t index_of(const ColumnSubset& s) { return s.index(); }

/// Entry i is (prod_{j in S} a_ij)^(1/|S|), computed in log space.
/// Throws DimensionMismatch.
PriorityVector geometric_mean_columns(const PCMatrix& a, const ColumnSubset& subset);

/// Geometric mean of all columns (w_C).
PriorityVector geometric_mean_all_columns(const PCMatrix& a);

struct SweepRow {
  std::uint64_t index = 0;
  std::string pattern;
  PriorityVector vector;  // normalized, last entry 1
  double norm1 = 0.0;
  double norm2 = 0.0;
};

struct SweepOptions {
  unsigned threads = 1;
  /// Checks every mean with is_efficient; defaults on in builds without NDEBUG.
#ifdef NDEBUG
  bool verify_efficiency = false;
#else
  bool verify_efficiency = true;
#endif
};

/// One row per subset index 1 .. 2^n - 1, in index order. Throws
/// DimensionTooLarge beyond kMaxSweepDimension.
std::vector<SweepRow> sweep_all_subsets(const PCMatrix& a, const SweepOptions& options = {});

/// Row positions of the extreme norms; the smallest index wins ties.
struct SweepExtremes {
  std::size_t argmin1 = 0, argmax1 = 0, argmin2 = 0, argmax2 = 0;
};
SweepExtremes sweep_extremes(const std::vector<SweepRow>& rows);

}  // namespace effvec
