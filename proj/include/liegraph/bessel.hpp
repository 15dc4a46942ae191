#pragma once

#include "liegraph/rootdata.hpp"

namespace liegraph {

// Bessel function of the first kind, series below the crossover
// max(12, 2*beta) and the Hankel asymptotic expansion above it.
double bessel_j(double beta, double x);

// radial profile r -> J_{d/2}(r) / r^(d/2), continuous at 0
double jtilde_radial(int rank, double r);
double jtilde_radial_zero(int rank);  // value at r = 0

// modified Bessel kernel on the weight space of rs
double jtilde(const RootSystem& rs, const Vec& x);

// mixed directional derivative prod_{alpha in Phi+} d_{-alpha} applied to
// jtilde, by nested central differences with 3-level Richardson extrapolation.
// Restricted to systems with at most 6 positive roots. The base step defaults
// to 1e-2*(1+||x||); quadratures pass a capped step to stay below the
// oscillation scale of the kernel.
double partial_phi_minus(const RootSystem& rs, const Vec& x);
double partial_phi_minus(const RootSystem& rs, const Vec& x, double h0);

// d/dr of the radial profile (analytic, via J_{d/2+1}); used by the rank-1
// closed forms and as the oracle for the finite-difference path
double jtilde_radial_derivative(int rank, double r);

}  // namespace liegraph
