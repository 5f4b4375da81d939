#pragma once

// Random comparison matrices and the subset-mean comparison protocols.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "effvec/column_means.hpp"
#include "effvec/pcm.hpp"
#include "effvec/random.hpp"

namespace effvec {

enum class GeneratorKind {
  UniformUpper,      // upper triangle i.i.d. uniform on (lo, hi)
  HadamardQuotient,  // a_ij = b_ij / b_ji with b i.i.d. uniform on (lo, hi)
};

std::string_view to_string(GeneratorKind kind) noexcept;
/// "uniform-upper" or "hadamard-quotient"; BadConfig otherwise.
GeneratorKind parse_generator(std::string_view name);

struct NormSelection {
  bool norm1 = true;
  bool frobenius = true;
};

struct ExperimentConfig {
  std::size_t n = 5;
  std::size_t count = 100;
  GeneratorKind generator = GeneratorKind::UniformUpper;
  double lo = 0.0;
  double hi = 100.0;
  std::uint64_t seed = 0;
  NormSelection norms;
  unsigned threads = 1;

  /// BadDimension for n outside 2..kMaxSweepDimension, BadRange unless
  /// 0 <= lo < hi, BadConfig for count == 0 or no norm selected.
  void validate() const;
};

/// Both generators draw from open intervals, so lo = 0 is allowed. BadRange
/// unless 0 <= lo < hi.
PCMatrix random_pc_uniform_upper(std::size_t n, double lo, double hi, RandomStream& stream);
PCMatrix random_pc_hadamard_quotient(std::size_t n, double lo, double hi, RandomStream& stream);

/// Matrix j is drawn from substream j of config.seed.
PCMatrix generate_matrix(const ExperimentConfig& config, std::size_t j);
std::vector<PCMatrix> generate_matrices(const ExperimentConfig& config);

struct NormSummary {
  std::uint64_t argmin = 0;  // subset index, smallest wins ties
  std::uint64_t argmax = 0;
  double min = 0.0;
  double max = 0.0;
  double all_columns = 0.0;  // w_C
  double perron = 0.0;       // w_P
  double ratio() const { return max / min; }
  double all_columns_over_min() const { return all_columns / min; }
};

struct BestWorstSummary {
  std::size_t n = 0;
  NormSummary norm1;
  NormSummary frobenius;
  PriorityVector all_columns_mean;
  PriorityVector perron_vector;
  double perron_eigenvalue = 0.0;
  bool perron_efficient = false;
  std::vector<SweepRow> rows;
};

BestWorstSummary best_worst_summary(const PCMatrix& a, unsigned threads = 1);

struct BatchRecord {
  std::size_t matrix = 0;
  std::uint64_t argmin1 = 0;
  double min1 = 0.0;
  double all_columns1 = 0.0;
  std::uint64_t argmin2 = 0;
  double min2 = 0.0;
  double all_columns2 = 0.0;
  double perron1 = 0.0;
  double perron2 = 0.0;
  bool perron_efficient = false;
  /// Subset means that failed is_efficient (expected 0).
  std::size_t inefficient_means = 0;
};

std::vector<BatchRecord> batch_compare(const ExperimentConfig& config);
std::vector<BatchRecord> batch_compare(std::span<const PCMatrix> matrices, unsigned threads = 1);

inline constexpr double kTieTolerance = 1e-12;
inline constexpr double kDegenerateNorm = 1e-12;

/// Per subset index i (stored at i - 1):
///   p[i]    = sum_j ||D(A_j, w_ij)||_2 / min_k ||D(A_j, w_kj)||_2
///   wins[i] = number of j whose minimum is attained by subset i; subsets
///             within relative kTieTolerance of the minimum all count.
/// Matrices whose minimum is below kDegenerateNorm are left out of both and
/// listed in `excluded`.
struct SubsetStats {
  std::vector<double> p;
  std::vector<std::size_t> wins;
  std::size_t matrices_used = 0;
  std::vector<std::size_t> excluded;
};

/// BadConfig unless the Frobenius norm is selected.
SubsetStats subset_statistics(const ExperimentConfig& config);
SubsetStats subset_statistics(std::span<const PCMatrix> matrices, unsigned threads = 1);

}  // namespace effvec
