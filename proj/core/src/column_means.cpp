#include "effvec/column_means.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "effvec/efficiency.hpp"
#include "effvec/error.hpp"
#include "effvec/spectral.hpp"
#include "parallel.hpp"

namespace effvec {

ColumnSubset ColumnSubset::from_index(std::uint64_t index, std::size_t n) {
  if (n == 0 || n > 63) {
    throw Error(ErrorKind::BadDimension, "column subsets support 1 <= n <= 63",
                {{"n", static_cast<double>(n)}});
  }
  const std::uint64_t last = (std::uint64_t{1} << n) - 1;
  if (index < 1 || index > last) {
    throw Error(ErrorKind::IndexOutOfRange,
                "subset index " + std::to_string(index) + " out of range 1.." +
                    std::to_string(last),
                {{"index", static_cast<double>(index)}, {"max", static_cast<double>(last)}});
  }
  return ColumnSubset(n, index);
}

ColumnSubset ColumnSubset::from_columns(const std::vector<std::size_t>& columns, std::size_t n) {
  if (columns.empty()) throw Error(ErrorKind::EmptyIndexSet, "empty column subset");
  std::uint64_t mask = 0;
  for (std::size_t c : columns) {
    if (c >= n) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "column " + std::to_string(c + 1) + " out of range 1.." + std::to_string(n),
                  {{"index", static_cast<double>(c + 1)}, {"n", static_cast<double>(n)}});
    }
    mask |= std::uint64_t{1} << (n - 1 - c);
  }
  return from_index(mask, n);
}

std::size_t ColumnSubset::count() const noexcept {
  return static_cast<std::size_t>(std::popcount(mask_));
}

std::vector<std::size_t> ColumnSubset::columns() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j)
    if (contains(j)) out.push_back(j);
  return out;
}

std::string ColumnSubset::bit_pattern() const {
  std::string s(n_, '0');
  for (std::size_t j = 0; j < n_; ++j)
    if (contains(j)) s[j] = '1';
  return s;
}

PriorityVector geometric_mean_columns(const PCMatrix& a, const ColumnSubset& subset) {
  const std::size_t n = a.size();
  if (subset.dimension() != n) {
    throw Error(ErrorKind::DimensionMismatch, "subset dimension does not match the matrix",
                {{"expected", static_cast<double>(n)},
                 {"got", static_cast<double>(subset.dimension())}});
  }
  const auto cols = subset.columns();
  const double inv = 1.0 / static_cast<double>(cols.size());
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j : cols) s += std::log(a(i, j));
    w[i] = std::exp(s * inv);
  }
  return PriorityVector(std::move(w));
}

PriorityVector geometric_mean_all_columns(const PCMatrix& a) {
  return geometric_mean_columns(a, ColumnSubset::from_index((std::uint64_t{1} << a.size()) - 1,
                                                            a.size()));
}

std::vector<SweepRow> sweep_all_subsets(const PCMatrix& a, const SweepOptions& options) {
  const std::size_t n = a.size();
  if (n > kMaxSweepDimension) {
    throw Error(ErrorKind::DimensionTooLarge,
                "subset sweep is limited to n <= " + std::to_string(kMaxSweepDimension),
                {{"n", static_cast<double>(n)}});
  }
  const std::size_t count = (std::size_t{1} << n) - 1;
  std::vector<SweepRow> rows(count);
  detail::parallel_for(count, options.threads, [&](std::size_t r) {
    const auto subset = ColumnSubset::from_index(r + 1, n);
    const PriorityVector w = geometric_mean_columns(a, subset);
    if (options.verify_efficiency && !is_efficient(a, w).efficient) {
      throw std::logic_error("column-subset mean " + subset.bit_pattern() +
                             " failed the efficiency check");
    }
    const auto d = deviation(a, w);
    rows[r] = SweepRow{r + 1, subset.bit_pattern(), w.normalized(), norm1(d), norm_frobenius(d)};
  });
  return rows;
}

SweepExtremes sweep_extremes(const std::vector<SweepRow>& rows) {
  SweepExtremes e;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].norm1 < rows[e.argmin1].norm1) e.argmin1 = r;
    if (rows[r].norm1 > rows[e.argmax1].norm1) e.argmax1 = r;
    if (rows[r].norm2 < rows[e.argmin2].norm2) e.argmin2 = r;
    if (rows[r].norm2 > rows[e.argmax2].norm2) e.argmax2 = r;
  }
  return e;
}

}  // namespace effvec
