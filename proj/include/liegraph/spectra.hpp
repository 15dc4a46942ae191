#pragma once

#include <string>
#include <vector>

#include "liegraph/gaussian.hpp"

namespace liegraph {

// dense symmetric matrix, row-major
struct SymMatrix {
  int n = 0;
  std::vector<double> a;
  double& at(int i, int j) { return a[(size_t)i * n + j]; }
  double at(int i, int j) const { return a[(size_t)i * n + j]; }
  static SymMatrix zero(int n) { return SymMatrix{n, std::vector<double>((size_t)n * n, 0.0)}; }
};

// cyclic Jacobi; eigenvalues sorted descending. Throws on asymmetric input
// (beyond 1e-12 of the scale) and after 60 sweeps without convergence.
std::vector<double> eig_symmetric(const SymMatrix& m);

struct SpectralMeasure {
  std::vector<double> eigenvalues;  // descending
  int N = 0;
};

SpectralMeasure spectral_measure(const std::vector<double>& eigenvalues);

// M_s = (1/N) sum c_i^s for s = 1..s_max
std::vector<double> empirical_moments(const SpectralMeasure& sm, int s_max);

// Gine-Koltchinskii l2 distance between an empirical spectrum (already
// scaled by 1/N) and a limiting spectrum given as spectral lines expanded
// with multiplicity d_lambda^2. Positives are matched descending from the
// top, negatives ascending from the bottom, zeros pad the middle.
double gk_delta(const std::vector<double>& empirical_scaled, const std::vector<SpectralLine>& limit);
double gk_delta_multisets(std::vector<double> a, std::vector<double> b);

std::string spectrum_csv(const SpectralMeasure& sm);
std::string histogram_json(const SpectralMeasure& sm, double lo, double hi, int bins);

}  // namespace liegraph
