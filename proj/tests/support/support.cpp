#include "support.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "effvec/io.hpp"

namespace effvec::testing {

std::string data_path(const std::string& name) { return std::string(EFFVEC_DATA_DIR) + "/" + name; }

PCMatrix load(const std::string& name) { return read_matrix_file(data_path(name)); }

PCMatrix example2_reduced() {
  const PCMatrix a = load("example2.csv");
  const std::vector<std::size_t> keep{0, 1, 2, 3};
  return principal_submatrix(a, keep);
}

const std::array<TableRow, 31> kExample5Table{{
    {1, "00001", 111.06, 98.846},  {2, "00010", 401.53, 302.311}, {3, "00011", 150.47, 94.324},
    {4, "00100", 112.16, 99.154},  {5, "00101", 111.58, 99.005},  {6, "00110", 152.21, 95.328},
    {7, "00111", 130.39, 95.576},  {8, "01000", 318.27, 209.361}, {9, "01001", 115.66, 88.581},
    {10, "01010", 111.78, 51.913}, {11, "01011", 116.87, 76.601}, {12, "01100", 116.35, 89.645},
    {13, "01101", 108.38, 94.171}, {14, "01110", 118.62, 78.223}, {15, "01111", 115.57, 88.454},
    {16, "10000", 109.61, 93.772}, {17, "10001", 111.86, 96.992}, {18, "10010", 127.49, 79.599},
    {19, "10011", 123.22, 90.829}, {20, "10100", 111.92, 97.300}, {21, "10101", 111.90, 97.910},
    {22, "10110", 123.95, 91.500}, {23, "10111", 120.39, 94.442}, {24, "11000", 154.93, 88.719},
    {25, "11001", 113.28, 90.595}, {26, "11010", 119.47, 64.637}, {27, "11011", 112.64, 82.586},
    {28, "11100", 113.69, 91.184}, {29, "11101", 108.57, 94.052}, {30, "11110", 113.54, 83.474},
    {31, "11111", 111.96, 89.539},
}};

bool close_rel(double got, double want, double rel) {
  return std::abs(got - want) <= rel * std::abs(want);
}

PCMatrix random_pc(std::mt19937_64& rng, std::size_t n, double spread) {
  std::uniform_real_distribution<double> u(-std::log(spread), std::log(spread));
  std::vector<double> upper(n * (n - 1) / 2);
  for (double& x : upper) x = std::exp(u(rng));
  return PCMatrix::from_upper(n, upper);
}

PriorityVector random_vector(std::mt19937_64& rng, std::size_t n, double spread) {
  std::uniform_real_distribution<double> u(0.0, std::log(spread));
  std::vector<double> w(n);
  for (double& x : w) x = std::exp(u(rng));
  return PriorityVector(std::move(w));
}

PriorityVector random_subset_mean(std::mt19937_64& rng, const PCMatrix& a) {
  const std::size_t n = a.size();
  std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << n) - 1);
  const std::uint64_t mask = pick(rng);
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < n; ++j)
    if ((mask >> j) & 1U) cols.push_back(j);
  return PriorityVector(oracle_geometric_mean(a, cols));
}

Adjacency oracle_digraph(const PCMatrix& a, const PriorityVector& w, double eps) {
  const std::size_t n = a.size();
  Adjacency g(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && w[i] / w[j] >= a(i, j) * (1.0 - eps)) g[i][j] = true;
  return g;
}

bool oracle_strongly_connected(const Adjacency& g) {
  const std::size_t n = g.size();
  Adjacency r = g;
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  for (const auto& row : r)
    for (bool b : row)
      if (!b) return false;
  return true;
}

bool oracle_efficient(const PCMatrix& a, const PriorityVector& w) {
  return oracle_strongly_connected(oracle_digraph(a, w));
}

namespace {

std::vector<double> abs_deviation(const PCMatrix& a, const std::vector<double>& w) {
  const std::size_t n = a.size();
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::abs(w[i] / w[j] - a(i, j));
  return d;
}

bool dominates(const std::vector<double>& dv, const std::vector<double>& dw) {
  bool strict = false;
  for (std::size_t k = 0; k < dv.size(); ++k) {
    const double slack = 1e-12 * (1.0 + dw[k]);
    if (dv[k] > dw[k] + slack) return false;
    if (dv[k] < dw[k] - slack) strict = true;
  }
  return strict;
}

}  // namespace

std::optional<std::vector<double>> find_dominating(const PCMatrix& a, const PriorityVector& w) {
  const std::size_t n = a.size();
  const std::vector<double> base(w.begin(), w.end());
  const auto dw = abs_deviation(a, base);
  const std::uint32_t full = (1U << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    for (int k = 1; k <= 50; ++k) {
      for (double sign : {1.0, -1.0}) {
        const double f = 1.0 + sign * k * 1e-3;
        std::vector<double> v = base;
        for (std::size_t i = 0; i < n; ++i)
          if ((mask >> i) & 1U) v[i] *= f;
        if (dominates(abs_deviation(a, v), dw)) return v;
      }
    }
  }
  return std::nullopt;
}

std::vector<double> oracle_geometric_mean(const PCMatrix& a,
                                          const std::vector<std::size_t>& cols) {
  std::vector<double> w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    double p = 1.0;
    for (std::size_t j : cols) p *= a(i, j);
    w[i] = std::pow(p, 1.0 / static_cast<double>(cols.size()));
  }
  return w;
}

double oracle_norm1(const PCMatrix& a, const std::vector<double>& w) {
  double s = 0.0;
  for (double x : abs_deviation(a, w)) s += x;
  return s;
}

double oracle_norm2(const PCMatrix& a, const std::vector<double>& w) {
  double s = 0.0;
  for (double x : abs_deviation(a, w)) s += x * x;
  return std::sqrt(s);
}

}  // namespace effvec::testing
