#pragma once

#include <string>
#include <vector>

#include "liegraph/geometry.hpp"
#include "liegraph/poisson.hpp"
#include "liegraph/rng.hpp"

namespace liegraph {

// directed edge traversal of length s visiting vertices 0..k-1; encoded as
// the restricted growth string of the underlying set partition of Z/sZ
struct Circuit {
  int s = 0;
  int k = 0;
  std::vector<int> traversal;  // b_0..b_{s-1}, consecutive entries distinct (cyclically)
};

// undirected labeled multigraph component after reduction
struct ReducedComponent {
  bool is_loop = false;
  long long loop_label = 0;
  int vertices = 0;                                    // for non-loop components
  std::vector<std::pair<std::pair<int, int>, long long>> edges;  // ((a,b), label), canonical
  std::string key() const;
  long long label_sum_minus_edges() const;  // sum (l_e - 1)
};

struct ReducedCircuit {
  std::vector<ReducedComponent> components;  // sorted by key
  int k_prime = 0;                           // total vertices
  int c = 0;                                 // component count
  std::string key() const;
  bool operator==(const ReducedCircuit& o) const { return key() == o.key(); }
};

// one circuit per set partition of Z/sZ with no two cyclically adjacent
// positions in the same block; deterministic RGS order. Guarded at s <= 12.
std::vector<Circuit> enumerate_circuits(int s);

// circuit built from explicit identities i_a = i_b (positions 1-based as in
// the worked examples); used by tests
Circuit circuit_from_identities(int s, const std::vector<std::vector<int>>& identity_groups);

ReducedCircuit reduce_circuit(const Circuit& c);
ReducedCircuit reduce_multigraph(int vertices,
                                 const std::vector<std::pair<std::pair<int, int>, long long>>& edges);

// k from k - 1 = k' - c + sum (l_e - 1)
long long k_parameter(const ReducedCircuit& r);

struct ExpansionRow {
  ReducedCircuit reduction;
  long long multiplicity = 0;
  long long k = 0;
};

// circuits of length s grouped by reduction; rows ordered by decreasing k
// then canonical key. Guarded at 2 <= s <= 8.
std::vector<ExpansionRow> expansion_table(int s);

std::string expansion_table_json(int s);

// Monte Carlo estimate of E_{R,N} at L_N = (ell/N)^(1/dim X): spanning-tree
// edges are importance-sampled as chains of uniform ball steps, the remaining
// edges contribute return indicators, and components factorize.
double estimate_E_R(const SpaceSpec& space, const ReducedCircuit& r, int N, double ell, int trials,
                    Rng& rng);

// circuit -> rooted simple graph for Boolean-model embedding counts
CircuitGraph circuit_graph(const Circuit& c);

}  // namespace liegraph
