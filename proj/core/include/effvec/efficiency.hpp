#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "effvec/pcm.hpp"

namespace effvec {

inline constexpr double kEdgeTolerance = 1e-9;

/// G(A, w): vertex i has an edge to j when w_i/w_j >= a_ij.
class DominanceDigraph {
 public:
  explicit DominanceDigraph(std::size_t n) : n_(n), adj_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool has_edge(std::size_t from, std::size_t to) const { return adj_[from * n_ + to] != 0; }
  void set_edge(std::size_t from, std::size_t to, bool present = true) {
    adj_[from * n_ + to] = present ? 1 : 0;
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  std::size_t n_;
  std::vector<unsigned char> adj_;
};

/// Edge i -> j iff w_i/w_j >= a_ij (1 - eps). Throws DimensionMismatch.
DominanceDigraph build_digraph(const PCMatrix& a, const PriorityVector& w,
                               double eps = kEdgeTolerance);

struct Connectivity {
  bool strongly_connected = false;
  // Filled when not strongly connected: a nonempty proper vertex set with no
  // edge leaving it, found by searching from `root`.
  std::size_t root = 0;
  std::vector<std::size_t> witness;
};

/// Forward and reverse reachability from vertex 0. In builds without NDEBUG
/// the answer is asserted against strongly_connected_by_matrix_power.
Connectivity is_strongly_connected(const DominanceDigraph& g);

/// (I + L)^(n-1) > 0 entrywise, with boolean arithmetic.
bool strongly_connected_by_matrix_power(const DominanceDigraph& g);

/// True iff no edge starts inside `set` and ends outside it.
bool is_closed_set(const DominanceDigraph& g, const std::vector<std::size_t>& set);

struct EfficiencyCertificate {
  bool efficient = false;
  std::size_t root = 0;
  std::vector<std::size_t> witness;
};

EfficiencyCertificate is_efficient(const PCMatrix& a, const PriorityVector& w,
                                   double eps = kEdgeTolerance);

/// All ratios v_i/w_i agree to within relative `tol`.
bool proportional(const PriorityVector& v, const PriorityVector& w,
                  double tol = kProjectiveTolerance);

/// Closed-form efficiency test for Z_n(x):
///   w_n <= w_i <= w_1 <= x w_n  for all 1 < i < n, or the reversed chain.
/// Comparisons carry a relative slack of 1e-9.
bool z_efficient(std::size_t n, double x, const PriorityVector& w);

}  // namespace effvec
