#pragma once

#include <string>
#include <vector>

#include "liegraph/rootdata.hpp"

namespace liegraph {

struct SpectralLine {
  DominantWeight lambda;
  double c = 0.0;
  long long multiplicity = 0;  // d_lambda^2
};

// limiting eigenvalue c_lambda of A(N,L)/N for fixed L < pi:
// (1/(d_l vol(t/tZ))) (L/sqrt(2pi))^d sum_w eps(w) Jt(L(lambda+rho-w(rho)))
double limiting_eigenvalue(const RootSystem& rs, const DominantWeight& lambda, double L);

// independent oracle for rank <= 2: Weyl-integration of the character against
// the ball indicator over the Cartan algebra (polar grid, two resolutions)
double limiting_eigenvalue_quadrature(const RootSystem& rs, const DominantWeight& lambda, double L);

// one line per dominant weight with ||lambda+rho|| <= cutoff, sorted by c
// descending, ties broken lexicographically on fundamental coordinates
std::vector<SpectralLine> limiting_spectrum(const RootSystem& rs, double L, double cutoff);

struct RadiusGap {
  double radius_coeff;  // c_0
  double gap_coeff;     // c_0 - max_{lambda != 0} c_lambda over the window
  DominantWeight runner_up;
};
RadiusGap spectral_radius_gap(const RootSystem& rs, double L, double cutoff);

std::string spectrum_to_csv(const std::vector<SpectralLine>& lines);

}  // namespace liegraph
