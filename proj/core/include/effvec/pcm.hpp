#pragma once

// Reciprocal pairwise-comparison matrices and priority vectors.
//
// All indices in the C++ API are 0-based. File formats and the command-line
// tool present 1-based positions.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace effvec {

inline constexpr double kReciprocityTolerance = 1e-9;
inline constexpr double kProjectiveTolerance = 1e-9;

/// Row-major square array of doubles, as read from a file. No invariants.
using RawMatrix = std::vector<std::vector<double>>;

/// Positive weight vector. Only its direction carries meaning: two vectors
/// that differ by a positive factor describe the same consistent matrix.
class PriorityVector {
 public:
  PriorityVector() = default;
  /// Throws NonPositiveEntry if any weight is not a finite positive number.
  explicit PriorityVector(std::vector<double> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const noexcept { return weights_; }
  auto begin() const noexcept { return weights_.begin(); }
  auto end() const noexcept { return weights_.end(); }

  /// Scaled copy whose last entry is 1.
  PriorityVector normalized() const;

  friend bool operator==(const PriorityVector&, const PriorityVector&) = default;

 private:
  std::vector<double> weights_;
};

/// max_ij |(v_i/v_j)/(w_i/w_j) - 1| <= tol. Throws DimensionMismatch.
bool projectively_equal(const PriorityVector& v, const PriorityVector& w,
                        double tol = kProjectiveTolerance);

/// n-by-n positive matrix with unit diagonal and a_ji = 1/a_ij.
///
/// Instances are canonical: the strictly lower triangle holds the exact
/// floating-point reciprocals of the upper triangle.
class PCMatrix {
 public:
  /// Validates and canonicalizes. Errors: NotSquare, BadDimension (n < 2),
  /// NonPositiveEntry, NonUnitDiagonal, ReciprocityViolation.
  static PCMatrix from_raw(const RawMatrix& raw);

  /// Builds from the strictly upper triangle, row by row
  /// (a_12, a_13, ..., a_1n, a_23, ...). n = 1 is accepted here. Errors:
  /// DimensionMismatch on a wrong-length triangle, NonPositiveEntry.
  static PCMatrix from_upper(std::size_t n, std::span<const double> upper);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::vector<double> column(std::size_t j) const;
  RawMatrix to_raw() const;

  friend bool operator==(const PCMatrix&, const PCMatrix&) = default;

 private:
  PCMatrix(std::size_t n, std::vector<double> entries)
      : n_(n), a_(std::move(entries)) {}

  std::size_t n_ = 0;
  std::vector<double> a_;
};

inline PCMatrix validate_pc(const RawMatrix& raw) { return PCMatrix::from_raw(raw); }

/// W = w w^(-T), i.e. W_ij = w_i / w_j.
PCMatrix consistent_from_vector(const PriorityVector& w);

/// |a_ij a_jk - a_ik| <= tol a_ik for every triple.
bool is_consistent(const PCMatrix& a, double tol = 1e-9);

/// All ones except (0, n-1) = x and (n-1, 0) = 1/x. BadDimension if n < 3,
/// BadRange if x is not positive.
PCMatrix z_matrix(std::size_t n, double x);

/// Rows and columns in `keep` (sorted, duplicates dropped). A single index
/// yields the 1-by-1 matrix [1]. Errors: EmptyIndexSet, IndexOutOfRange.
PCMatrix principal_submatrix(const PCMatrix& a, std::span<const std::size_t> keep);

/// D(A, w) = w w^(-T) - A.
class DeviationMatrix {
 public:
  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  std::span<const double> entries() const noexcept { return d_; }

 private:
  DeviationMatrix(std::size_t n, std::vector<double> d) : n_(n), d_(std::move(d)) {}
  friend DeviationMatrix deviation(const PCMatrix&, const PriorityVector&);

  std::size_t n_ = 0;
  std::vector<double> d_;
};

/// Throws DimensionMismatch.
DeviationMatrix deviation(const PCMatrix& a, const PriorityVector& w);

/// x -> P D x: scale entry i by scaling[i], then move it to position
/// permutation[i].
class MonomialTransform {
 public:
  /// Throws BadConfig unless permutation is a bijection on 0..n-1, and
  /// NonPositiveEntry for a non-positive scaling factor.
  MonomialTransform(std::vector<std::size_t> permutation, std::vector<double> scaling);

  static MonomialTransform identity(std::size_t n);
  static MonomialTransform scaling_only(std::vector<double> scaling);
  static MonomialTransform permutation_only(std::vector<std::size_t> permutation);

  std::size_t size() const noexcept { return perm_.size(); }
  std::span<const std::size_t> permutation() const noexcept { return perm_; }
  std::span<const double> scaling() const noexcept { return scale_; }

  MonomialTransform inverse() const;

 private:
  std::vector<std::size_t> perm_;
  std::vector<double> scale_;
};

/// P D A D^(-1) P^T. Throws DimensionMismatch.
PCMatrix monomial_similarity(const PCMatrix& a, const MonomialTransform& t);
/// P D w. Throws DimensionMismatch.
PriorityVector transform_vector(const PriorityVector& w, const MonomialTransform& t);

}  // namespace effvec
