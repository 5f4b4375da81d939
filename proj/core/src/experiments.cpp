#include "effvec/experiments.hpp"

#include <cmath>
#include <string>

#include "effvec/efficiency.hpp"
#include "effvec/error.hpp"
#include "effvec/spectral.hpp"
#include "parallel.hpp"

namespace effvec {

namespace {

void check_range(double lo, double hi) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo >= 0.0 && hi > lo)) {
    throw Error(ErrorKind::BadRange, "need 0 <= lo < hi", {{"lo", lo}, {"hi", hi}});
  }
}

struct MatrixNorms {
  std::vector<double> norm1;
  std::vector<double> norm2;
  std::size_t inefficient = 0;
};

MatrixNorms subset_norms(const PCMatrix& a, bool check_efficiency) {
  const std::size_t n = a.size();
  const std::size_t count = (std::size_t{1} << n) - 1;
  MatrixNorms out;
  out.norm1.resize(count);
  out.norm2.resize(count);
  for (std::size_t r = 0; r < count; ++r) {
    const auto w = geometric_mean_columns(a, ColumnSubset::from_index(r + 1, n));
    if (check_efficiency && !is_efficient(a, w).efficient) ++out.inefficient;
    const auto d = deviation(a, w);
    out.norm1[r] = norm1(d);
    out.norm2[r] = norm_frobenius(d);
  }
  return out;
}

std::size_t argmin(const std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[best]) best = i;
  return best;
}

}  // namespace

std::string_view to_string(GeneratorKind kind) noexcept {
  return kind == GeneratorKind::UniformUpper ? "uniform-upper" : "hadamard-quotient";
}

GeneratorKind parse_generator(std::string_view name) {
  if (name == "uniform-upper") return GeneratorKind::UniformUpper;
  if (name == "hadamard-quotient") return GeneratorKind::HadamardQuotient;
  throw Error(ErrorKind::BadConfig, "unknown generator '" + std::string(name) + "'");
}

void ExperimentConfig::validate() const {
  if (n < 2 || n > kMaxSweepDimension) {
    throw Error(ErrorKind::BadDimension,
                "experiment dimension must be in 2.." + std::to_string(kMaxSweepDimension),
                {{"n", static_cast<double>(n)}});
  }
  check_range(lo, hi);
  if (count == 0) throw Error(ErrorKind::BadConfig, "count must be at least 1");
  if (!norms.norm1 && !norms.frobenius) {
    throw Error(ErrorKind::BadConfig, "select at least one norm");
  }
}

PCMatrix random_pc_uniform_upper(std::size_t n, double lo, double hi, RandomStream& stream) {
  check_range(lo, hi);
  std::vector<double> upper(n * (n - 1) / 2);
  for (double& x : upper) x = stream.uniform_open(lo, hi);
  return PCMatrix::from_upper(n, upper);
}

PCMatrix random_pc_hadamard_quotient(std::size_t n, double lo, double hi,
                                     RandomStream& stream) {
  check_range(lo, hi);
  std::vector<double> b(n * n);
  for (double& x : b) x = stream.uniform_open(lo, hi);
  std::vector<double> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) upper.push_back(b[i * n + j] / b[j * n + i]);
  return PCMatrix::from_upper(n, upper);
}

PCMatrix generate_matrix(const ExperimentConfig& config, std::size_t j) {
  RandomStream stream(config.seed, j);
  return config.generator == GeneratorKind::UniformUpper
             ? random_pc_uniform_upper(config.n, config.lo, config.hi, stream)
             : random_pc_hadamard_quotient(config.n, config.lo, config.hi, stream);
}

std::vector<PCMatrix> generate_matrices(const ExperimentConfig& config) {
  config.validate();
  std::vector<PCMatrix> out;
  out.reserve(config.count);
  for (std::size_t j = 0; j < config.count; ++j) out.push_back(generate_matrix(config, j));
  return out;
}

BestWorstSummary best_worst_summary(const PCMatrix& a, unsigned threads) {
  BestWorstSummary s;
  s.n = a.size();
  SweepOptions opts;
  opts.threads = threads;
  s.rows = sweep_all_subsets(a, opts);
  const auto ext = sweep_extremes(s.rows);
  const auto& all = s.rows.back();

  const auto perron = perron_vector(a);
  s.perron_vector = perron.vector;
  s.perron_eigenvalue = perron.eigenvalue;
  s.perron_efficient = is_efficient(a, perron.vector).efficient;
  s.all_columns_mean = all.vector;
  const auto dp = deviation(a, perron.vector);

  s.norm1 = {s.rows[ext.argmin1].index, s.rows[ext.argmax1].index,
             s.rows[ext.argmin1].norm1, s.rows[ext.argmax1].norm1,
             all.norm1, norm1(dp)};
  s.frobenius = {s.rows[ext.argmin2].index, s.rows[ext.argmax2].index,
                 s.rows[ext.argmin2].norm2, s.rows[ext.argmax2].norm2,
                 all.norm2, norm_frobenius(dp)};
  return s;
}

std::vector<BatchRecord> batch_compare(std::span<const PCMatrix> matrices, unsigned threads) {
  std::vector<BatchRecord> out(matrices.size());
  detail::parallel_for(matrices.size(), threads, [&](std::size_t j) {
    const PCMatrix& a = matrices[j];
    const auto norms = subset_norms(a, /*check_efficiency=*/true);
    const std::size_t i1 = argmin(norms.norm1);
    const std::size_t i2 = argmin(norms.norm2);
    const auto perron = perron_vector(a);
    const auto dp = deviation(a, perron.vector);
    BatchRecord r;
    r.matrix = j;
    r.argmin1 = i1 + 1;
    r.min1 = norms.norm1[i1];
    r.all_columns1 = norms.norm1.back();
    r.argmin2 = i2 + 1;
    r.min2 = norms.norm2[i2];
    r.all_columns2 = norms.norm2.back();
    r.perron1 = norm1(dp);
    r.perron2 = norm_frobenius(dp);
    r.perron_efficient = is_efficient(a, perron.vector).efficient;
    r.inefficient_means = norms.inefficient;
    out[j] = r;
  });
  return out;
}

std::vector<BatchRecord> batch_compare(const ExperimentConfig& config) {
  const auto matrices = generate_matrices(config);
  return batch_compare(matrices, config.threads);
}

SubsetStats subset_statistics(std::span<const PCMatrix> matrices, unsigned threads) {
  SubsetStats stats;
  if (matrices.empty()) return stats;
  const std::size_t n = matrices.front().size();
  const std::size_t count = (std::size_t{1} << n) - 1;
  std::vector<std::vector<double>> per(matrices.size());
  detail::parallel_for(matrices.size(), threads, [&](std::size_t j) {
    if (matrices[j].size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "all matrices must share one dimension");
    }
    per[j] = subset_norms(matrices[j], /*check_efficiency=*/false).norm2;
  });
  // Summed in matrix order so the result does not depend on scheduling.
  stats.p.assign(count, 0.0);
  stats.wins.assign(count, 0);
  for (std::size_t j = 0; j < per.size(); ++j) {
    const auto& norms = per[j];
    const double best = norms[argmin(norms)];
    if (best < kDegenerateNorm) {
      stats.excluded.push_back(j);
      continue;
    }
    ++stats.matrices_used;
    for (std::size_t i = 0; i < count; ++i) {
      stats.p[i] += norms[i] / best;
      if (norms[i] <= best * (1.0 + kTieTolerance)) ++stats.wins[i];
    }
  }
  return stats;
}

SubsetStats subset_statistics(const ExperimentConfig& config) {
  config.validate();
  if (!config.norms.frobenius) {
    throw Error(ErrorKind::BadConfig, "subset statistics need the Frobenius norm");
  }
  const auto matrices = generate_matrices(config);
  return subset_statistics(matrices, config.threads);
}

}  // namespace effvec
