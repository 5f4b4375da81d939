#pragma once

// Growing efficient vectors one alternative at a time.
//
// If w is efficient for A with row/column p deleted, then inserting x at
// position p gives an efficient vector for A exactly when x lies between
// min_i w_i/a_ip and max_i w_i/a_ip.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "effvec/pcm.hpp"

namespace effvec {

struct ExtensionInterval {
  double lo = 0.0;
  double hi = 0.0;

  /// lo (1 - tol) <= x <= hi (1 + tol).
  bool contains(double x, double tol = 1e-9) const {
    return x >= lo * (1.0 - tol) && x <= hi * (1.0 + tol);
  }
};

/// `w` is indexed like A with row/column `pos` removed. Errors:
/// IndexOutOfRange, DimensionMismatch, SeedNotEfficient.
ExtensionInterval extension_interval(const PCMatrix& a, const PriorityVector& w,
                                     std::size_t pos);

/// `w` with `x` inserted at `pos`. Errors: OutOfInterval plus those of
/// extension_interval.
PriorityVector extend(const PCMatrix& a, const PriorityVector& w, std::size_t pos, double x);

struct EnumerationStrategy {
  /// Log-uniform interior draws per interval, on top of lo, sqrt(lo hi), hi.
  std::size_t interior_samples = 3;
  std::uint64_t rng_seed = 0;
  /// Family size cap; exceeding it truncates and sets the provenance flag.
  std::size_t budget = 10000;
  /// Points per axis for the two Z_3 chain parameters of a 3-element seed.
  std::size_t seed_grid = 5;
  /// Order in which the remaining indices are added. Empty means ascending.
  std::vector<std::size_t> growth_order;
};

struct GrowthStep {
  std::size_t added_index = 0;
  std::size_t vectors_in = 0;
  std::size_t vectors_out = 0;
  /// Inserted values, grouped by parent in the order the parents were held.
  std::vector<std::vector<double>> samples;
};

struct FamilyProvenance {
  std::vector<std::size_t> seed;
  std::size_t seed_vectors = 0;
  std::vector<GrowthStep> steps;
  EnumerationStrategy strategy;
  bool truncated = false;
};

struct EfficientFamily {
  PCMatrix matrix;
  /// Normalized (last entry 1), pairwise non-proportional, sorted
  /// lexicographically.
  std::vector<PriorityVector> members;
  FamilyProvenance provenance;
};

/// Efficient vectors for the seed principal submatrix (2 or 3 indices),
/// each indexed like the sorted seed. BadSeedSize otherwise.
std::vector<PriorityVector> seed_vectors(const PCMatrix& a, std::vector<std::size_t> seed,
                                         std::size_t grid = 5);

/// Errors: BadSeedSize, IndexOutOfRange, BadConfig (bad growth order).
EfficientFamily inductive_enumerate(const PCMatrix& a, std::vector<std::size_t> seed,
                                    const EnumerationStrategy& strategy = {});

/// Diagonal similarity taking a 3-by-3 comparison matrix to Z_3(x); returns
/// the transform and x.
std::pair<MonomialTransform, double> reduce_to_z3(const PCMatrix& b);

}  // namespace effvec
