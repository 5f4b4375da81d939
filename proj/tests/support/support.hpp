#pragma once

// Fixtures and independent reference implementations used by the tests.
// Nothing here calls into the efficiency or column-means code paths, so the
// oracles can be compared against them.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "effvec/pcm.hpp"

namespace effvec::testing {

std::string data_path(const std::string& name);
PCMatrix load(const std::string& name);

/// example2.csv with row and column 5 removed.
PCMatrix example2_reduced();

struct TableRow {
  int index;
  const char* pattern;
  double norm1;
  double norm2;
};
/// Reference norms for all 31 subset means of example5.csv.
extern const std::array<TableRow, 31> kExample5Table;

bool close_rel(double got, double want, double rel);

// ---- random instances ------------------------------------------------------

/// Upper-triangle entries log-uniform on [1/spread, spread].
PCMatrix random_pc(std::mt19937_64& rng, std::size_t n, double spread = 9.0);
PriorityVector random_vector(std::mt19937_64& rng, std::size_t n, double spread = 10.0);
/// A random column or random column-subset geometric mean (efficient by theory).
PriorityVector random_subset_mean(std::mt19937_64& rng, const PCMatrix& a);

// ---- oracles ---------------------------------------------------------------

using Adjacency = std::vector<std::vector<bool>>;

/// Edges by the raw definition w_i / w_j >= a_ij (1 - eps).
Adjacency oracle_digraph(const PCMatrix& a, const PriorityVector& w, double eps = 1e-9);
/// Transitive closure (Floyd-Warshall) of the adjacency relation.
bool oracle_strongly_connected(const Adjacency& g);
bool oracle_efficient(const PCMatrix& a, const PriorityVector& w);

/// Local search for a vector v with |D(A,v)| <= |D(A,w)| entrywise and strict
/// somewhere. Moves: scale one coordinate, or any nonempty proper subset of
/// coordinates, by 1 +/- k * 1e-3 for k = 1..50. Only sensible for small n.
std::optional<std::vector<double>> find_dominating(const PCMatrix& a, const PriorityVector& w);

/// Entry i = (prod_{j in cols} a_ij)^(1/|cols|), computed with pow.
std::vector<double> oracle_geometric_mean(const PCMatrix& a, const std::vector<std::size_t>& cols);
double oracle_norm1(const PCMatrix& a, const std::vector<double>& w);
double oracle_norm2(const PCMatrix& a, const std::vector<double>& w);

}  // namespace effvec::testing
