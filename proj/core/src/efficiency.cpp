#include "effvec/efficiency.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "effvec/error.hpp"

namespace effvec {

namespace {

std::vector<bool> reach(const DominanceDigraph& g, std::size_t root, bool reverse) {
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (seen[v]) continue;
      if (reverse ? g.has_edge(v, u) : g.has_edge(u, v)) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

std::vector<std::size_t> members(const std::vector<bool>& mask, bool value) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i] == value) out.push_back(i);
  return out;
}

bool approx_le(double a, double b) {
  constexpr double kSlack = 1e-9;
  return a <= b + kSlack * std::max(std::abs(a), std::abs(b));
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> DominanceDigraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

DominanceDigraph build_digraph(const PCMatrix& a, const PriorityVector& w, double eps) {
  const std::size_t n = a.size();
  if (w.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "vector has " + std::to_string(w.size()) + " entries, matrix is " +
                    std::to_string(n) + "x" + std::to_string(n),
                {{"expected", static_cast<double>(n)}, {"got", static_cast<double>(w.size())}});
  }
  DominanceDigraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && w[i] / w[j] >= a(i, j) * (1.0 - eps)) g.set_edge(i, j);
  return g;
}

Connectivity is_strongly_connected(const DominanceDigraph& g) {
  Connectivity out;
  const std::size_t n = g.size();
  if (n <= 1) {
    out.strongly_connected = true;
    return out;
  }
  // Vertices that cannot reach the root have no edge into the set that can,
  // so they form a closed set. If everything reaches the root but the root
  // does not reach everything, the set it does reach is closed instead.
  const auto backward = reach(g, 0, /*reverse=*/true);
  if (std::find(backward.begin(), backward.end(), false) != backward.end()) {
    out.witness = members(backward, false);
  } else {
    const auto forward = reach(g, 0, /*reverse=*/false);
    if (std::find(forward.begin(), forward.end(), false) != forward.end()) {
      out.witness = members(forward, true);
    }
  }
  out.strongly_connected = out.witness.empty();
  assert(out.strongly_connected == strongly_connected_by_matrix_power(g));
  assert(out.strongly_connected || is_closed_set(g, out.witness));
  return out;
}

bool strongly_connected_by_matrix_power(const DominanceDigraph& g) {
  const std::size_t n = g.size();
  if (n <= 1) return true;
  std::vector<unsigned char> base(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) base[i * n + j] = (i == j || g.has_edge(i, j)) ? 1 : 0;
  auto multiply = [n](const std::vector<unsigned char>& x, const std::vector<unsigned char>& y) {
    std::vector<unsigned char> z(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (x[i * n + k])
          for (std::size_t j = 0; j < n; ++j) z[i * n + j] |= y[k * n + j];
    return z;
  };
  std::vector<unsigned char> power = base;
  for (std::size_t e = 1; e < n - 1; ++e) power = multiply(power, base);
  return std::all_of(power.begin(), power.end(), [](unsigned char c) { return c != 0; });
}

bool is_closed_set(const DominanceDigraph& g, const std::vector<std::size_t>& set) {
  std::vector<bool> in(g.size(), false);
  for (std::size_t v : set) in[v] = true;
  for (std::size_t u : set)
    for (std::size_t v = 0; v < g.size(); ++v)
      if (!in[v] && g.has_edge(u, v)) return false;
  return true;
}

EfficiencyCertificate is_efficient(const PCMatrix& a, const PriorityVector& w, double eps) {
  const auto c = is_strongly_connected(build_digraph(a, w, eps));
  return {c.strongly_connected, c.root, c.witness};
}

bool proportional(const PriorityVector& v, const PriorityVector& w, double tol) {
  return projectively_equal(v, w, tol);
}

bool z_efficient(std::size_t n, double x, const PriorityVector& w) {
  if (n < 3 || w.size() != n) {
    throw Error(ErrorKind::BadDimension, "z_efficient needs n >= 3 and a length-n vector",
                {{"n", static_cast<double>(n)}, {"length", static_cast<double>(w.size())}});
  }
  const double first = w[0];
  const double last = w[n - 1];
  bool ascending = approx_le(first, last * x);
  bool descending = approx_le(last * x, first);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    ascending = ascending && approx_le(last, w[i]) && approx_le(w[i], first);
    descending = descending && approx_le(w[i], last) && approx_le(first, w[i]);
  }
  return ascending || descending;
}

}  // namespace effvec
