#pragma once

#include <string>
#include <vector>

namespace liegraph {

enum class RankOneKind { SphereR, ProjR, ProjC, ProjH, ProjO2 };

struct RankOneSpace {
  RankOneKind kind;
  int n;          // projective/sphere parameter (2 for ProjO2)
  double beta_a;  // beta-law parameters of the spherical coordinate
  double beta_b;  // (unused for spheres, which carry the theta^n law)
  int dimension;
};

RankOneSpace make_rankone(RankOneKind kind, int n);

// Zonal orthogonal polynomials, normalized to 1 at the base point:
// Legendre P^{n,k}(t) on [-1,1] for spheres, Jacobi J^{(a,b),k}(s) on [0,1].
double legendre_p(double n, int k, double t);
double jacobi_j(double a, double b, int k, double s);

// evaluates the space's own polynomial family (Legendre for spheres at
// t in [-1,1], Jacobi at s in [0,1])
double orthopoly_eval(const RankOneSpace& space, int k, double t);

// Rodrigues-formula route (finite Leibniz expansion of the k-fold
// derivative); independent of the recurrences, used as the test oracle
double legendre_p_rodrigues(double n, int k, double t);
double jacobi_j_rodrigues(double a, double b, int k, double s);

// limiting eigenvalue c_k of A(N,L)/N; L in (0,pi) for spheres and
// (0,pi/2) for projective spaces
double rankone_eigenvalue(const RankOneSpace& space, int k, double L);

long long rankone_multiplicity(const RankOneSpace& space, int k);

std::string rankone_to_csv(const RankOneSpace& space, double L, int k_max);

}  // namespace liegraph
