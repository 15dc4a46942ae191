#pragma once

#include <string>
#include <vector>

#include "liegraph/circuits.hpp"
#include "liegraph/rng.hpp"
#include "liegraph/rootdata.hpp"

namespace liegraph {

// C_{lambda,N} = d_lambda c_lambda via the Bessel sum
double c_coeff(const RootSystem& rs, const DominantWeight& lambda, double L);

// I_k = int_C ((d_{Phi-} Jt)(x) / (2pi)^(d/2))^k dx / delta(x)^(k-2) for
// A1 (elementary integrand + analytic tail) and A2 (tensor quadrature with an
// envelope tail bound). Raises a quadrature error when the truncation bound
// cannot be met at the requested relative tail tolerance.
double one_vertex_integral(const RootSystem& rs, int k, double tail_rel_tol = 1e-10);

// I_{(a1,a2,a3)} for SU(2): triple integral against the Clebsch-Gordan
// density q_{x,y}(z) = 1/2 on |x-y| <= z <= x+y (coefficient units)
double two_vertex_integral_su2(const std::vector<int>& a_labels);

// scaling factor turning I_R into the Boolean-model embedding limit e_R at
// intensity 1: e_R = I_R * (vol(G)/vol(t/tZ))^(k-1)
double two_vertex_embedding_limit(const RootSystem& rs, const std::vector<int>& a_labels);

struct MomentTerm {
  double value = 0.0;
  std::string provenance;  // "quadrature" | "simulated"
};

struct LimitMomentTable {
  double ell = 0.0;
  double ell_prime = 0.0;
  std::vector<double> I;              // I[k] for k = 2..7 (index k)
  double I221 = 0.0;                  // SU(2) two-vertex integral
  std::vector<MomentTerm> M;          // M[s] for s = 2..s_max (index s)
  int s_max = 0;
};

// SU(2) limit moments M_2..M_{s_max} (s_max <= 7); the s = 7 two-vertex
// terms (3,2,1) and (2,2,2,1) fall back to Boolean-model embedding estimates
LimitMomentTable limiting_moments(const RootSystem& rs, double ell, int s_max, Rng& rng,
                                  int sim_trials = 200000);

std::string moment_table_json(const LimitMomentTable& t);

// oriented multigraph for graph functionals; vertices 0..k'-1
struct FunctionalGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // (a, b) oriented a -> b; a == b allowed
};

struct GfEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
};

// Monte Carlo mean over Haar tuples of prod_e ch^{lambda_e}(g_a g_b^{-1});
// SU(2) only, characters in closed form
GfEstimate graph_functional_estimate(const FunctionalGraph& graph, const std::vector<int>& weights,
                                     long long samples, Rng& rng);

// finite-N expected moment E[M_{s,N}] via the exact circuit identity
// M_{s,N} = sum_(H,T) (N-1)...(N-k+1) E_{R(H,T),N} with E_{R,N} estimated by
// the chained-ball-step Monte Carlo
double circuit_moment_estimate(const SpaceSpec& space, int s, int N, double ell, int trials, Rng& rng);

}  // namespace liegraph
