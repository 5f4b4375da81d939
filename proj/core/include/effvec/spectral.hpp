#pragma once

#include <cstddef>

#include "effvec/pcm.hpp"

namespace effvec {

struct PerronResult {
  PriorityVector vector;  // max entry 1
  double eigenvalue = 0.0;
  std::size_t iterations = 0;
  /// max_i |(A v)_i - lambda v_i| / lambda
  double residual = 0.0;
};

/// Power iteration from the all-ones vector, rescaled to max entry 1 every
/// step. Stops once the largest relative change between iterates is below
/// `tol` and the eigen-residual is at most `tol`. Throws NoConvergence.
PerronResult perron_vector(const PCMatrix& a, double tol = 1e-13,
                           std::size_t max_iter = 100000);

/// Sum of |d_ij|.
double norm1(const DeviationMatrix& d);
/// Frobenius norm.
double norm_frobenius(const DeviationMatrix& d);

}  // namespace effvec
