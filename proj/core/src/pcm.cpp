#include "effvec/pcm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "effvec/error.hpp"

namespace effvec {

namespace {

double one_based(std::size_t i) { return static_cast<double>(i + 1); }

[[noreturn]] void dimension_mismatch(std::size_t expected, std::size_t got) {
  throw Error(ErrorKind::DimensionMismatch,
              "dimension mismatch: expected " + std::to_string(expected) + ", got " +
                  std::to_string(got),
              {{"expected", static_cast<double>(expected)},
               {"got", static_cast<double>(got)}});
}

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

PriorityVector::PriorityVector(std::vector<double> weights) : weights_(std::move(weights)) {
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!positive_finite(weights_[i])) {
      throw Error(ErrorKind::NonPositiveEntry,
                  "weight " + std::to_string(i + 1) + " is not a positive finite number",
                  {{"i", one_based(i)}, {"value", weights_[i]}});
    }
  }
}

PriorityVector PriorityVector::normalized() const {
  if (weights_.empty()) return *this;
  const double last = weights_.back();
  std::vector<double> out(weights_.size());
  std::transform(weights_.begin(), weights_.end(), out.begin(),
                 [last](double x) { return x / last; });
  out.back() = 1.0;
  return PriorityVector(std::move(out));
}

bool projectively_equal(const PriorityVector& v, const PriorityVector& w, double tol) {
  if (v.size() != w.size()) dimension_mismatch(v.size(), w.size());
  if (v.size() == 0) return true;
  // (v_i/v_j)/(w_i/w_j) = r_i/r_j with r = v/w, so the worst pair is max/min.
  double lo = v[0] / w[0];
  double hi = lo;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double r = v[i] / w[i];
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return hi / lo - 1.0 <= tol;
}

PCMatrix PCMatrix::from_raw(const RawMatrix& raw) {
  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw Error(ErrorKind::NotSquare,
                  "row " + std::to_string(i + 1) + " has " + std::to_string(raw[i].size()) +
                      " entries, expected " + std::to_string(n),
                  {{"row", one_based(i)}, {"length", static_cast<double>(raw[i].size())}});
    }
  }
  if (n < 2) {
    throw Error(ErrorKind::BadDimension, "a comparison matrix needs n >= 2",
                {{"n", static_cast<double>(n)}});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!positive_finite(raw[i][j])) {
        throw Error(ErrorKind::NonPositiveEntry,
                    "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") is not a positive finite number",
                    {{"i", one_based(i)}, {"j", one_based(j)}, {"value", raw[i][j]}});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(raw[i][i] - 1.0) > kReciprocityTolerance) {
      throw Error(ErrorKind::NonUnitDiagonal,
                  "diagonal entry " + std::to_string(i + 1) + " is not 1",
                  {{"i", one_based(i)}, {"value", raw[i][i]}});
    }
  }
  std::vector<double> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(raw[i][j] * raw[j][i] - 1.0) > kReciprocityTolerance) {
        throw Error(ErrorKind::ReciprocityViolation,
                    "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") and (" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                        ") are not reciprocal",
                    {{"i", one_based(i)},
                     {"j", one_based(j)},
                     {"a_ij", raw[i][j]},
                     {"a_ji", raw[j][i]}});
      }
      upper.push_back(raw[i][j]);
    }
  }
  return from_upper(n, upper);
}

PCMatrix PCMatrix::from_upper(std::size_t n, std::span<const double> upper) {
  if (n == 0) {
    throw Error(ErrorKind::BadDimension, "empty matrix", {{"n", 0.0}});
  }
  if (upper.size() != n * (n - 1) / 2) dimension_mismatch(n * (n - 1) / 2, upper.size());
  std::vector<double> a(n * n, 1.0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      const double x = upper[k];
      if (!positive_finite(x)) {
        throw Error(ErrorKind::NonPositiveEntry,
                    "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") is not a positive finite number",
                    {{"i", one_based(i)}, {"j", one_based(j)}, {"value", x}});
      }
      a[i * n + j] = x;
      a[j * n + i] = 1.0 / x;
    }
  }
  return PCMatrix(n, std::move(a));
}

std::vector<double> PCMatrix::column(std::size_t j) const {
  std::vector<double> c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
  return c;
}

RawMatrix PCMatrix::to_raw() const {
  RawMatrix raw(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) raw[i][j] = (*this)(i, j);
  return raw;
}

PCMatrix consistent_from_vector(const PriorityVector& w) {
  const std::size_t n = w.size();
  std::vector<double> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) upper.push_back(w[i] / w[j]);
  return PCMatrix::from_upper(n, upper);
}

bool is_consistent(const PCMatrix& a, double tol) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (std::abs(a(i, j) * a(j, k) - a(i, k)) > tol * a(i, k)) return false;
  return true;
}

PCMatrix z_matrix(std::size_t n, double x) {
  if (n < 3) {
    throw Error(ErrorKind::BadDimension, "Z_n(x) needs n >= 3",
                {{"n", static_cast<double>(n)}});
  }
  if (!positive_finite(x)) {
    throw Error(ErrorKind::BadRange, "Z_n(x) needs x > 0", {{"x", x}});
  }
  std::vector<double> upper(n * (n - 1) / 2, 1.0);
  upper[n - 2] = x;  // (0, n-1) is the last entry of the first row
  return PCMatrix::from_upper(n, upper);
}

PCMatrix principal_submatrix(const PCMatrix& a, std::span<const std::size_t> keep) {
  if (keep.empty()) throw Error(ErrorKind::EmptyIndexSet, "empty index set");
  std::vector<std::size_t> idx(keep.begin(), keep.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.back() >= a.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "index " + std::to_string(idx.back() + 1) + " out of range 1.." +
                    std::to_string(a.size()),
                {{"index", one_based(idx.back())}, {"n", static_cast<double>(a.size())}});
  }
  const std::size_t m = idx.size();
  std::vector<double> upper;
  upper.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) upper.push_back(a(idx[i], idx[j]));
  return PCMatrix::from_upper(m, upper);
}

DeviationMatrix deviation(const PCMatrix& a, const PriorityVector& w) {
  const std::size_t n = a.size();
  if (w.size() != n) dimension_mismatch(n, w.size());
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) d[i * n + j] = w[i] / w[j] - a(i, j);
  return DeviationMatrix(n, std::move(d));
}

MonomialTransform::MonomialTransform(std::vector<std::size_t> permutation,
                                     std::vector<double> scaling)
    : perm_(std::move(permutation)), scale_(std::move(scaling)) {
  if (perm_.size() != scale_.size()) dimension_mismatch(perm_.size(), scale_.size());
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t p : perm_) {
    if (p >= perm_.size() || seen[p]) {
      throw Error(ErrorKind::BadConfig, "permutation is not a bijection");
    }
    seen[p] = true;
  }
  for (std::size_t i = 0; i < scale_.size(); ++i) {
    if (!positive_finite(scale_[i])) {
      throw Error(ErrorKind::NonPositiveEntry, "scaling factors must be positive",
                  {{"i", one_based(i)}, {"value", scale_[i]}});
    }
  }
}

MonomialTransform MonomialTransform::identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return MonomialTransform(std::move(p), std::vector<double>(n, 1.0));
}

MonomialTransform MonomialTransform::scaling_only(std::vector<double> scaling) {
  std::vector<std::size_t> p(scaling.size());
  std::iota(p.begin(), p.end(), std::size_t{0});
  return MonomialTransform(std::move(p), std::move(scaling));
}

MonomialTransform MonomialTransform::permutation_only(std::vector<std::size_t> permutation) {
  std::vector<double> s(permutation.size(), 1.0);
  return MonomialTransform(std::move(permutation), std::move(s));
}

MonomialTransform MonomialTransform::inverse() const {
  const std::size_t n = perm_.size();
  std::vector<std::size_t> inv(n);
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    inv[perm_[i]] = i;
    s[perm_[i]] = 1.0 / scale_[i];
  }
  return MonomialTransform(std::move(inv), std::move(s));
}

PCMatrix monomial_similarity(const PCMatrix& a, const MonomialTransform& t) {
  const std::size_t n = a.size();
  if (t.size() != n) dimension_mismatch(n, t.size());
  const auto p = t.permutation();
  const auto d = t.scaling();
  RawMatrix b(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) b[p[i]][p[j]] = d[i] * a(i, j) / d[j];
  std::vector<double> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) upper.push_back(b[i][j]);
  return PCMatrix::from_upper(n, upper);
}

PriorityVector transform_vector(const PriorityVector& w, const MonomialTransform& t) {
  if (t.size() != w.size()) dimension_mismatch(w.size(), t.size());
  const auto p = t.permutation();
  const auto d = t.scaling();
  std::vector<double> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[p[i]] = d[i] * w[i];
  return PriorityVector(std::move(out));
}

}  // namespace effvec
