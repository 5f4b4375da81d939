#include "effvec/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "effvec/efficiency.hpp"
#include "effvec/error.hpp"
#include "effvec/random.hpp"

namespace effvec {

namespace {

void check_index(std::size_t i, std::size_t n) {
  if (i >= n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(n),
                {{"index", static_cast<double>(i + 1)}, {"n", static_cast<double>(n)}});
  }
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t pos) {
  std::vector<std::size_t> keep;
  keep.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    if (i != pos) keep.push_back(i);
  return keep;
}

PriorityVector insert_at(const PriorityVector& w, std::size_t pos, double x) {
  std::vector<double> out(w.begin(), w.end());
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), x);
  return PriorityVector(std::move(out));
}

std::vector<double> interval_samples(const ExtensionInterval& iv, std::size_t interior,
                                     RandomStream& rng) {
  if (iv.hi / iv.lo - 1.0 <= kProjectiveTolerance) return {iv.lo};
  std::vector<double> xs{iv.lo, std::sqrt(iv.lo * iv.hi), iv.hi};
  for (std::size_t k = 0; k < interior; ++k) xs.push_back(rng.log_uniform(iv.lo, iv.hi));
  return xs;
}

// Appends `v` unless a proportional vector is already kept. Returns false
// once the budget is exhausted.
bool keep_unique(std::vector<PriorityVector>& kept, PriorityVector v, std::size_t budget,
                 bool& truncated) {
  for (const auto& k : kept)
    if (projectively_equal(k, v)) return true;
  if (kept.size() >= budget) {
    truncated = true;
    return false;
  }
  kept.push_back(std::move(v));
  return true;
}

}  // namespace

ExtensionInterval extension_interval(const PCMatrix& a, const PriorityVector& w,
                                     std::size_t pos) {
  const std::size_t n = a.size();
  check_index(pos, n);
  if (w.size() + 1 != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "seed vector must have " + std::to_string(n - 1) + " entries",
                {{"expected", static_cast<double>(n - 1)},
                 {"got", static_cast<double>(w.size())}});
  }
  const auto keep = all_but(n, pos);
  if (!is_efficient(principal_submatrix(a, keep), w).efficient) {
    throw Error(ErrorKind::SeedNotEfficient,
                "seed vector is not efficient for the submatrix without index " +
                    std::to_string(pos + 1),
                {{"pos", static_cast<double>(pos + 1)}});
  }
  // The new last column of D has entries w_i/x - a_i,pos; it needs both
  // signs (or a zero), which pins x between the extreme ratios.
  ExtensionInterval iv{w[0] / a(keep[0], pos), w[0] / a(keep[0], pos)};
  for (std::size_t k = 1; k < keep.size(); ++k) {
    const double r = w[k] / a(keep[k], pos);
    iv.lo = std::min(iv.lo, r);
    iv.hi = std::max(iv.hi, r);
  }
  return iv;
}

PriorityVector extend(const PCMatrix& a, const PriorityVector& w, std::size_t pos, double x) {
  const auto iv = extension_interval(a, w, pos);
  if (!iv.contains(x)) {
    throw Error(ErrorKind::OutOfInterval,
                "x = " + std::to_string(x) + " is outside [" + std::to_string(iv.lo) + ", " +
                    std::to_string(iv.hi) + "]",
                {{"x", x}, {"lo", iv.lo}, {"hi", iv.hi}});
  }
  return insert_at(w, pos, x);
}

std::pair<MonomialTransform, double> reduce_to_z3(const PCMatrix& b) {
  if (b.size() != 3) {
    throw Error(ErrorKind::BadDimension, "reduce_to_z3 needs a 3x3 matrix",
                {{"n", static_cast<double>(b.size())}});
  }
  // With c the consistent vector through a_12 and a_23, diag(1/c) B diag(c)
  // has ones at (1,2) and (2,3); every 3x3 reciprocal matrix is already a
  // simple perturbation of a consistent one.
  const double c0 = b(0, 1) * b(1, 2);
  const double c1 = b(1, 2);
  const double x = b(0, 2) / c0;
  return {MonomialTransform::scaling_only({1.0 / c0, 1.0 / c1, 1.0}), x};
}

std::vector<PriorityVector> seed_vectors(const PCMatrix& a, std::vector<std::size_t> seed,
                                         std::size_t grid) {
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  if (seed.size() != 2 && seed.size() != 3) {
    throw Error(ErrorKind::BadSeedSize, "seed must name 2 or 3 distinct indices",
                {{"size", static_cast<double>(seed.size())}});
  }
  for (std::size_t i : seed) check_index(i, a.size());
  if (seed.size() == 2) return {PriorityVector({a(seed[0], seed[1]), 1.0})};

  const PCMatrix sub = principal_submatrix(a, seed);
  const auto [to_z, x] = reduce_to_z3(sub);
  const MonomialTransform back = to_z.inverse();
  grid = std::max<std::size_t>(grid, 2);
  // Efficient vectors of Z_3(x): u_3 = 1 and u_1 = x^s, u_2 = u_1^t for
  // s, t in [0, 1]; this walks whichever monotone chain x selects.
  std::vector<PriorityVector> out;
  bool unused = false;
  for (std::size_t i = 0; i < grid; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(grid - 1);
    for (std::size_t j = 0; j < grid; ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(grid - 1);
      const double u1 = std::pow(x, s);
      const PriorityVector u({u1, std::pow(u1, t), 1.0});
      keep_unique(out, transform_vector(u, back).normalized(), grid * grid, unused);
    }
  }
  return out;
}

EfficientFamily inductive_enumerate(const PCMatrix& a, std::vector<std::size_t> seed,
                                    const EnumerationStrategy& strategy) {
  const std::size_t n = a.size();
  std::vector<PriorityVector> current = seed_vectors(a, seed, strategy.seed_grid);
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());

  std::vector<std::size_t> order = strategy.growth_order;
  if (order.empty()) {
    for (std::size_t i = 0; i < n; ++i)
      if (!std::binary_search(seed.begin(), seed.end(), i)) order.push_back(i);
  } else {
    std::vector<std::size_t> check = order;
    check.insert(check.end(), seed.begin(), seed.end());
    std::sort(check.begin(), check.end());
    std::vector<std::size_t> expect(n);
    std::iota(expect.begin(), expect.end(), std::size_t{0});
    if (check != expect) {
      throw Error(ErrorKind::BadConfig,
                  "growth order must list every non-seed index exactly once");
    }
  }

  FamilyProvenance prov;
  prov.seed = seed;
  prov.seed_vectors = current.size();
  prov.strategy = strategy;

  std::vector<std::size_t> held = seed;
  for (std::size_t step = 0; step < order.size(); ++step) {
    const std::size_t p = order[step];
    auto it = std::lower_bound(held.begin(), held.end(), p);
    const auto local = static_cast<std::size_t>(it - held.begin());
    held.insert(it, p);
    const PCMatrix sub = principal_submatrix(a, held);

    GrowthStep record;
    record.added_index = p;
    record.vectors_in = current.size();
    std::vector<PriorityVector> next;
    bool room = true;
    for (std::size_t k = 0; k < current.size() && room; ++k) {
      RandomStream rng(strategy.rng_seed, (static_cast<std::uint64_t>(step) << 32) | k);
      const auto iv = extension_interval(sub, current[k], local);
      auto xs = interval_samples(iv, strategy.interior_samples, rng);
      for (double x : xs) {
        room = keep_unique(next, insert_at(current[k], local, x), strategy.budget,
                           prov.truncated);
        if (!room) break;
      }
      record.samples.push_back(std::move(xs));
    }
    record.vectors_out = next.size();
    prov.steps.push_back(std::move(record));
    current = std::move(next);
  }

  std::vector<PriorityVector> members;
  members.reserve(current.size());
  for (const auto& w : current) {
    if (!is_efficient(a, w).efficient) {
      throw std::logic_error("inductive_enumerate produced an inefficient vector");
    }
    members.push_back(w.normalized());
  }
  std::sort(members.begin(), members.end(), [](const PriorityVector& x, const PriorityVector& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  return {a, std::move(members), std::move(prov)};
}

}  // namespace effvec
