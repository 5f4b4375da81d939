#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "effvec/efficiency.hpp"
#include "effvec/error.hpp"
#include "support.hpp"

using namespace effvec;
namespace t = effvec::testing;

namespace {

PriorityVector mean_of_efficient_pair() {
  const double w[] = {4.1, 4.1, 1.0, 1.0};
  const double v[] = {4.2, 4.0, 3.0, 1.0};
  std::vector<double> m(4);
  for (std::size_t i = 0; i < 4; ++i) m[i] = std::sqrt(w[i] * v[i]);
  return PriorityVector(m);
}

DominanceDigraph random_digraph(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution edge(density);
  DominanceDigraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && edge(rng)) g.set_edge(i, j);
  return g;
}

t::Adjacency to_adjacency(const DominanceDigraph& g) {
  t::Adjacency a(g.size(), std::vector<bool>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) a[i][j] = g.has_edge(i, j);
  return a;
}

}  // namespace

TEST(BuildDigraph, AllOnesIsComplete) {
  const PCMatrix a = validate_pc({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  const auto g = build_digraph(a, PriorityVector({1.0, 1.0, 1.0}));
  EXPECT_EQ(g.edges().size(), 6U);
}

TEST(BuildDigraph, ColumnTiesGiveBothDirections) {
  const PCMatrix a = t::load("example1.csv");
  const auto g = build_digraph(a, PriorityVector(a.column(0)));
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
}

TEST(BuildDigraph, MeanOfEfficientPairHasSinkAtVertexFour) {
  const PCMatrix a = t::example2_reduced();
  const auto g = build_digraph(a, mean_of_efficient_pair());
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(g.has_edge(i, 3));
    EXPECT_FALSE(g.has_edge(3, i));
  }
  EXPECT_FALSE(is_strongly_connected(g).strongly_connected);
}

TEST(BuildDigraph, DimensionMismatch) {
  EXPECT_THROW(build_digraph(t::load("example1.csv"), PriorityVector({1.0, 1.0})), Error);
}

TEST(BuildDigraph, NoSelfLoopsAndTotal) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 2 + k % 7;
    const PCMatrix a = t::random_pc(rng, n);
    const PriorityVector w = t::random_vector(rng, n);
    const auto g = build_digraph(a, w);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_FALSE(g.has_edge(i, i));
      for (std::size_t j = i + 1; j < n; ++j) EXPECT_TRUE(g.has_edge(i, j) || g.has_edge(j, i));
    }
  }
}

TEST(BuildDigraph, MatchesDefinition) {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 300; ++k) {
    const PCMatrix a = t::random_pc(rng, 5);
    const PriorityVector w = t::random_vector(rng, 5);
    EXPECT_EQ(to_adjacency(build_digraph(a, w)), t::oracle_digraph(a, w));
  }
}

TEST(StrongConnectivity, SmallCases) {
  DominanceDigraph complete(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) complete.set_edge(i, j);
  EXPECT_TRUE(is_strongly_connected(complete).strongly_connected);

  DominanceDigraph one_way(2);
  one_way.set_edge(0, 1);
  const auto c = is_strongly_connected(one_way);
  EXPECT_FALSE(c.strongly_connected);
  EXPECT_EQ(c.witness, std::vector<std::size_t>{1});
  EXPECT_TRUE(is_closed_set(one_way, c.witness));

  DominanceDigraph single(1);
  EXPECT_TRUE(is_strongly_connected(single).strongly_connected);
}

TEST(StrongConnectivity, WitnessWhenRootReachesNothing) {
  DominanceDigraph g(3);
  g.set_edge(1, 0);
  g.set_edge(2, 0);
  g.set_edge(1, 2);
  g.set_edge(2, 1);
  const auto c = is_strongly_connected(g);
  EXPECT_FALSE(c.strongly_connected);
  EXPECT_TRUE(is_closed_set(g, c.witness));
  EXPECT_EQ(c.witness, std::vector<std::size_t>{0});
}

TEST(StrongConnectivity, AlgorithmsAgreeAndWitnessesAreClosed) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> dens(0.05, 0.9);
  for (int k = 0; k < 3000; ++k) {
    const std::size_t n = 1 + k % 9;
    const auto g = random_digraph(rng, n, dens(rng));
    const auto c = is_strongly_connected(g);
    EXPECT_EQ(c.strongly_connected, strongly_connected_by_matrix_power(g));
    EXPECT_EQ(c.strongly_connected, t::oracle_strongly_connected(to_adjacency(g)));
    if (!c.strongly_connected) {
      EXPECT_FALSE(c.witness.empty());
      EXPECT_LT(c.witness.size(), n);
      EXPECT_TRUE(is_closed_set(g, c.witness));
    }
  }
}

TEST(IsEfficient, Examples) {
  const PCMatrix ex1 = t::load("example1.csv");
  EXPECT_TRUE(is_efficient(ex1, PriorityVector({4.0 / 3, 7.0 / 6, 1.0})).efficient);
  const auto bad = is_efficient(ex1, PriorityVector({1.0, 1.0, 2.0}));
  EXPECT_FALSE(bad.efficient);
  EXPECT_FALSE(z_efficient(3, 1.5, PriorityVector({1.0, 1.0, 2.0})));
  EXPECT_TRUE(t::find_dominating(ex1, PriorityVector({1.0, 1.0, 2.0})).has_value());

  const PCMatrix c = consistent_from_vector(PriorityVector({3.0, 1.0, 7.0, 2.0}));
  for (std::size_t j = 0; j < 4; ++j) EXPECT_TRUE(is_efficient(c, PriorityVector(c.column(j))).efficient);

  const auto ex4 = is_efficient(t::example2_reduced(), mean_of_efficient_pair());
  EXPECT_FALSE(ex4.efficient);
  EXPECT_EQ(ex4.witness, std::vector<std::size_t>{3});
}

TEST(IsEfficient, CertificateWitnessIsClosed) {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 2 + k % 6;
    const PCMatrix a = t::random_pc(rng, n);
    const PriorityVector w = t::random_vector(rng, n);
    const auto cert = is_efficient(a, w);
    EXPECT_EQ(cert.efficient, t::oracle_efficient(a, w));
    if (!cert.efficient) {
      EXPECT_TRUE(is_closed_set(build_digraph(a, w), cert.witness));
    }
  }
}

TEST(IsEfficient, ColumnsAreEfficient) {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 2 + k % 8;
    const PCMatrix a = t::random_pc(rng, n, 50.0);
    for (std::size_t j = 0; j < n; ++j) EXPECT_TRUE(is_efficient(a, PriorityVector(a.column(j))).efficient);
  }
}

TEST(IsEfficient, MonomialEquivariance) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> s(0.05, 20.0);
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 3 + k % 5;
    const PCMatrix a = t::random_pc(rng, n);
    const PriorityVector w = k % 2 ? t::random_vector(rng, n) : t::random_subset_mean(rng, a);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> scale(n);
    for (double& x : scale) x = s(rng);
    const MonomialTransform tr(perm, scale);
    EXPECT_EQ(is_efficient(a, w).efficient,
              is_efficient(monomial_similarity(a, tr), transform_vector(w, tr)).efficient);
  }
}

TEST(Proportional, Examples) {
  EXPECT_TRUE(proportional(PriorityVector({1.0, 2.0, 3.0}), PriorityVector({2.0, 4.0, 6.0})));
  EXPECT_FALSE(proportional(PriorityVector({1.0, 2.0, 3.0}), PriorityVector({1.0, 2.0, 4.0})));
  EXPECT_THROW(proportional(PriorityVector({1.0, 2.0}), PriorityVector({1.0, 2.0, 4.0})), Error);
}

TEST(Proportional, EqualAbsoluteDeviationIffProportional) {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> c(0.1, 10.0);
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 2 + k % 6;
    const PCMatrix a = t::random_pc(rng, n);
    const PriorityVector w = t::random_vector(rng, n);
    std::vector<double> v(w.begin(), w.end());
    const double scale = c(rng);
    for (double& x : v) x *= scale;
    if (k % 2) v[k % n] *= 1.01;
    const PriorityVector pv(v);
    const auto dv = deviation(a, pv), dw = deviation(a, w);
    bool same = true;
    for (std::size_t e = 0; e < dv.entries().size(); ++e)
      same = same && std::abs(std::abs(dv.entries()[e]) - std::abs(dw.entries()[e])) <=
                         1e-9 * (1.0 + std::abs(dw.entries()[e]));
    EXPECT_EQ(same, proportional(pv, w)) << k;
  }
}

TEST(ZEfficient, Examples) {
  for (double w2 : {1.0, 1.2, 1.5}) EXPECT_TRUE(z_efficient(3, 1.5, PriorityVector({1.5, w2, 1.0})));
  EXPECT_FALSE(z_efficient(3, 1.5, PriorityVector({1.5, 1.6, 1.0})));
  EXPECT_TRUE(z_efficient(5, 1.0, PriorityVector({1.0, 1.0, 1.0, 1.0, 1.0})));
  EXPECT_THROW(z_efficient(2, 1.5, PriorityVector({1.0, 1.0})), Error);
}

TEST(ZEfficient, ReversedChainForSmallX) {
  // x < 1: w_n >= w_i >= w_1 >= x w_n.
  EXPECT_TRUE(z_efficient(4, 0.5, PriorityVector({0.6, 0.8, 0.9, 1.0})));
  EXPECT_TRUE(is_efficient(z_matrix(4, 0.5), PriorityVector({0.6, 0.8, 0.9, 1.0})).efficient);
}

TEST(ZEfficient, AgreesWithDigraphForXEqualsNine) {
  std::mt19937_64 rng(61);
  const PCMatrix z = z_matrix(3, 9.0);
  int efficient = 0;
  for (int k = 0; k < 10000; ++k) {
    const PriorityVector w = t::random_vector(rng, 3, 12.0);
    const bool e = is_efficient(z, w).efficient;
    efficient += e;
    EXPECT_EQ(z_efficient(3, 9.0, w), e);
  }
  EXPECT_GT(efficient, 100);
}

TEST(Perturbation, InefficientSetIsOpen) {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> f(1.0 - 1e-9, 1.0 + 1e-9);
  int checked = 0;
  for (int k = 0; k < 2000 && checked < 300; ++k) {
    const std::size_t n = 3 + k % 4;
    const PCMatrix a = t::random_pc(rng, n);
    const PriorityVector w = t::random_vector(rng, n);
    if (is_efficient(a, w).efficient) continue;
    const auto d = deviation(a, w);
    bool strict = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && std::abs(d(i, j)) < 1e-6 * a(i, j)) strict = false;
    if (!strict) continue;
    ++checked;
    for (int r = 0; r < 10; ++r) {
      std::vector<double> v(w.begin(), w.end());
      for (double& x : v) x *= f(rng);
      EXPECT_FALSE(is_efficient(a, PriorityVector(v)).efficient);
    }
  }
  EXPECT_GE(checked, 300);
}

TEST(Perturbation, EfficiencyStableAwayFromTies) {
  std::mt19937_64 rng(71);
  int checked = 0;
  for (int k = 0; k < 5000 && checked < 300; ++k) {
    const std::size_t n = 3 + k % 4;
    const PCMatrix a = t::random_pc(rng, n);
    const PriorityVector w = t::random_vector(rng, n, 3.0);
    if (!is_efficient(a, w).efficient) continue;
    const auto d = deviation(a, w);
    double delta = INFINITY;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) delta = std::min(delta, std::abs(d(i, j)) / a(i, j));
    if (delta < 1e-4) continue;
    ++checked;
    std::uniform_real_distribution<double> f(1.0 - 1e-3 * delta, 1.0 + 1e-3 * delta);
    for (int r = 0; r < 10; ++r) {
      std::vector<double> v(w.begin(), w.end());
      for (double& x : v) x *= f(rng);
      EXPECT_TRUE(is_efficient(a, PriorityVector(v)).efficient);
    }
  }
  EXPECT_GE(checked, 300);
}

TEST(BruteForceOracle, FindsDominatorForClearlyInefficientVectors) {
  std::mt19937_64 rng(73);
  int checked = 0;
  for (int k = 0; k < 2000 && checked < 100; ++k) {
    const std::size_t n = 3 + k % 2;
    const PCMatrix a = t::random_pc(rng, n);
    const PriorityVector w = t::random_vector(rng, n);
    const auto cert = is_efficient(a, w);
    if (cert.efficient) continue;
    // The closed set must sit clearly below its comparisons for a 1e-3 move
    // to help everywhere.
    const auto d = deviation(a, w);
    bool gap = true;
    for (std::size_t i : cert.witness)
      for (std::size_t j = 0; j < n; ++j)
        if (std::find(cert.witness.begin(), cert.witness.end(), j) == cert.witness.end() &&
            d(i, j) > -0.1 * a(i, j))
          gap = false;
    if (!gap) continue;
    ++checked;
    EXPECT_TRUE(t::find_dominating(a, w).has_value());
  }
  EXPECT_GE(checked, 100);
}

TEST(BruteForceOracle, NeverDominatesEfficientVectors) {
  std::mt19937_64 rng(79);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 2 + k % 3;
    const PCMatrix a = t::random_pc(rng, n);
    const PriorityVector w = t::random_subset_mean(rng, a);
    ASSERT_TRUE(is_efficient(a, w).efficient);
    EXPECT_FALSE(t::find_dominating(a, w).has_value());
  }
}
