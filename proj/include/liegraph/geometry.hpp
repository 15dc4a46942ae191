#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liegraph/linalg.hpp"
#include "liegraph/rng.hpp"
#include "liegraph/rootdata.hpp"

namespace liegraph {

enum class SpaceKind { SU, SO, USp, SphereR };

struct SpaceSpec {
  SpaceKind kind;
  int n;
  int dim;              // manifold dimension
  double vol;           // Riemannian volume (Killing normalization; spheres round)
  double diameter_hint; // upper bound on the diameter
};

// SU: n>=2, SO: n>=3, USp: n>=2, SphereR: n>=1.
// SO volume uses vol(Spin)/2 and needs n in {3,5,6,7,8,...}; other SO(n)
// still sample and measure distances but have no volume attached.
SpaceSpec make_space(SpaceKind kind, int n);

// sampled point: a unitary matrix (SU / SO / embedded USp) or a unit vector
struct Point {
  CMatrix m;
  Vec v;
};

Point haar_sample(const SpaceSpec& space, Rng& rng);

double geodesic_distance(const SpaceSpec& space, const Point& p, const Point& q);

// eigen-angle route for the group families, exposed for cross-checks
double geodesic_distance_eigen(const SpaceSpec& space, const Point& p, const Point& q);

struct GeometricGraph {
  int N = 0;
  double L = 0.0;
  std::vector<Point> points;
  std::vector<uint8_t> adjacency;  // row-major N*N, zero diagonal
  bool edge(int i, int j) const { return adjacency[(size_t)i * N + j] != 0; }
  long long edge_count() const;
  std::vector<int> degrees() const;
};

GeometricGraph build_geometric_graph(const SpaceSpec& space, int N, double L, Rng& rng);

// "i j" edge lines; the JSON header goes to a sidecar
std::string graph_edge_list(const GeometricGraph& g);
std::string graph_header_json(const SpaceSpec& space, const GeometricGraph& g, uint64_t seed);

// uniform sample in the geodesic ball B(e, L), via exponential coordinates
// with the Weyl-integration Jacobian as rejection weight (groups only)
Point ball_step(const SpaceSpec& space, const Point& base, double L, Rng& rng);

// exact ball volume fraction vol(B(e,L))/vol(G) via the c_0 eigenvalue
double ball_fraction(const SpaceSpec& space, double L);

// root system of the group's family (A_{n-1}, B/D for SO/Spin, C_n)
RootSystem space_root_system(const SpaceSpec& space);

}  // namespace liegraph
