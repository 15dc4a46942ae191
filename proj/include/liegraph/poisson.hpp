#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liegraph/geometry.hpp"
#include "liegraph/rng.hpp"

namespace liegraph {

// volume of the Euclidean ball of radius r in R^d
double ball_volume(int d, double r);

struct BooleanModelSample {
  int d = 0;
  double intensity = 0.0;
  double window_radius = 0.0;
  std::vector<std::vector<double>> points;  // index 0 is the root at the origin
  std::vector<std::vector<int>> adjacency;  // unit connection radius
};

// Poisson(intensity * ball_volume(d, R)) points uniform in the window ball,
// root prepended at the origin
BooleanModelSample sample_boolean_model(int d, double intensity, double R, Rng& rng);

// finite rooted graph in canonical form (root is vertex 0); position j of a
// row sits at bit (63-j)
struct RootedNeighborhood {
  int k = 0;
  int radius = 0;
  std::vector<uint64_t> rows;  // adjacency bitmask per vertex, canonical order
  bool edge(int i, int j) const { return (rows[i] >> (63 - j)) & 1; }
  std::string key() const;
  bool operator<(const RootedNeighborhood& o) const { return key() < o.key(); }
  bool operator==(const RootedNeighborhood& o) const { return k == o.k && rows == o.rows; }
};

// BFS truncation at graph distance n followed by canonical labeling
RootedNeighborhood rooted_neighborhood(const std::vector<std::vector<int>>& adjacency, int root, int n);

struct BsComparison {
  double tv_distance = 0.0;
  std::map<std::string, double> graph_histogram;    // canonical key -> probability
  std::map<std::string, double> boolean_histogram;  // same for the Boolean model
  std::map<int, double> graph_degrees;              // root-degree marginals
  std::map<int, double> boolean_degrees;
  std::map<std::string, std::string> key_edge_lists;
};

// empirical pi_n distribution of Gamma_geom(N, (ell/N)^(1/dim)) under random
// roots vs the Boolean model at intensity ell/vol(X); `trials` counts root
// samples on each side, amortized over graphs
BsComparison bs_compare(const SpaceSpec& space, int N, double ell, int n, int trials, Rng& rng,
                        int roots_per_graph = 50);

double tv_distance(const std::map<std::string, double>& p, const std::map<std::string, double>& q);

// circuit as a rooted directed traversal (vertex ids, cyclic); vertex 0 is
// the traversal start. Used for embedding counts in the Boolean model.
struct CircuitGraph {
  int k = 0;
  std::vector<std::pair<int, int>> edges;  // simple undirected edges
  int radius_from_root = 0;
};

// Monte Carlo mean of the number of injective root-anchored graph morphisms
// of the circuit into the Boolean model
double embedding_count_estimate(const CircuitGraph& circuit, int d, double intensity, int trials,
                                Rng& rng);

std::string histogram_json(const BsComparison& c);

}  // namespace liegraph
