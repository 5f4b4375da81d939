#include "effvec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "effvec/error.hpp"

namespace effvec {

namespace {

void multiply(const PCMatrix& a, const std::vector<double>& v, std::vector<double>& out) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
}

}  // namespace

PerronResult perron_vector(const PCMatrix& a, double tol, std::size_t max_iter) {
  const std::size_t n = a.size();
  std::vector<double> v(n, 1.0);
  std::vector<double> av(n);
  double residual = 0.0;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    multiply(a, v, av);
    const double scale = *std::max_element(av.begin(), av.end());
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double next = av[i] / scale;
      change = std::max(change, std::abs(next - v[i]) / next);
      v[i] = next;
    }
    multiply(a, v, av);
    double lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i) lambda += av[i] / v[i];
    lambda /= static_cast<double>(n);
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      residual = std::max(residual, std::abs(av[i] - lambda * v[i]));
    residual /= lambda;
    if (change < tol && residual <= tol) {
      return {PriorityVector(v), lambda, it, residual};
    }
  }
  throw Error(ErrorKind::NoConvergence,
              "power iteration did not converge in " + std::to_string(max_iter) + " steps",
              {{"max_iter", static_cast<double>(max_iter)}, {"residual", residual}});
}

double norm1(const DeviationMatrix& d) {
  double s = 0.0;
  for (double x : d.entries()) s += std::abs(x);
  return s;
}

double norm_frobenius(const DeviationMatrix& d) {
  double s = 0.0;
  for (double x : d.entries()) s += x * x;
  return std::sqrt(s);
}

}  // namespace effvec
