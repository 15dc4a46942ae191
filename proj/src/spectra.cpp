#include "liegraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "liegraph/util.hpp"

namespace liegraph {

std::vector<double> eig_symmetric(const SymMatrix& m) {
  const int n = m.n;
  if ((size_t)n * n != m.a.size()) throw std::invalid_argument("matrix storage size mismatch");
  double scale = 0.0;
  for (double v : m.a) scale = std::max(scale, std::abs(v));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(m.at(i, j) - m.at(j, i)) > 1e-12 * std::max(1.0, scale))
        throw std::invalid_argument("eig_symmetric: input is not symmetric");

  std::vector<double> a = m.a;
  auto at = [&](int i, int j) -> double& { return a[(size_t)i * n + j]; };

  double frob = 0.0;
  for (double v : a) frob += v * v;
  frob = std::sqrt(frob);
  const double target = 1e-12 * std::max(frob, 1e-300);

  auto offdiag = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
    return std::sqrt(2.0 * s);
  };

  int sweep = 0;
  while (offdiag() > target) {
    if (++sweep > 60) throw std::runtime_error("eig_symmetric: no convergence after 60 sweeps");
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0.0) continue;
        double app = at(p, p), aqq = at(q, q);
        double tau = (aqq - app) / (2.0 * apq);
        double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<double>());
  return ev;
}

SpectralMeasure spectral_measure(const std::vector<double>& eigenvalues) {
  SpectralMeasure sm;
  sm.eigenvalues = eigenvalues;
  std::sort(sm.eigenvalues.begin(), sm.eigenvalues.end(), std::greater<double>());
  sm.N = (int)sm.eigenvalues.size();
  return sm;
}

std::vector<double> empirical_moments(const SpectralMeasure& sm, int s_max) {
  if (s_max < 1) throw std::invalid_argument("s_max must be >= 1");
  std::vector<double> m(s_max, 0.0);
  for (double c : sm.eigenvalues) {
    double p = 1.0;
    for (int s = 0; s < s_max; ++s) {
      p *= c;
      m[s] += p;
    }
  }
  for (double& v : m) v /= std::max(1, sm.N);
  return m;
}

double gk_delta_multisets(std::vector<double> a, std::vector<double> b) {
  auto split = [](std::vector<double>& v, std::vector<double>& pos, std::vector<double>& neg) {
    for (double x : v)
      if (x > 0.0)
        pos.push_back(x);
      else if (x < 0.0)
        neg.push_back(x);
    std::sort(pos.begin(), pos.end(), std::greater<double>());  // descending from the top
    std::sort(neg.begin(), neg.end());                          // ascending from the bottom
  };
  std::vector<double> ap, an, bp, bn;
  split(a, ap, an);
  split(b, bp, bn);
  double s = 0.0;
  size_t np = std::max(ap.size(), bp.size());
  for (size_t i = 0; i < np; ++i) {
    double x = i < ap.size() ? ap[i] : 0.0;
    double y = i < bp.size() ? bp[i] : 0.0;
    s += (x - y) * (x - y);
  }
  size_t nn = std::max(an.size(), bn.size());
  for (size_t i = 0; i < nn; ++i) {
    double x = i < an.size() ? an[i] : 0.0;
    double y = i < bn.size() ? bn[i] : 0.0;
    s += (x - y) * (x - y);
  }
  return std::sqrt(s);
}

double gk_delta(const std::vector<double>& empirical_scaled, const std::vector<SpectralLine>& limit) {
  std::vector<double> lim;
  for (const SpectralLine& s : limit)
    for (long long i = 0; i < s.multiplicity; ++i) lim.push_back(s.c);
  return gk_delta_multisets(empirical_scaled, lim);
}

std::string spectrum_csv(const SpectralMeasure& sm) {
  std::ostringstream os;
  os << "eigenvalue\n";
  for (double c : sm.eigenvalues) os << format_double(c) << "\n";
  return os.str();
}

std::string histogram_json(const SpectralMeasure& sm, double lo, double hi, int bins) {
  std::vector<long long> count(bins, 0);
  for (double c : sm.eigenvalues) {
    int b = (int)((c - lo) / (hi - lo) * bins);
    if (b < 0) b = 0;
    if (b >= bins) b = bins - 1;
    ++count[b];
  }
  std::ostringstream os;
  os << "{\"lo\":" << format_double(lo) << ",\"hi\":" << format_double(hi) << ",\"bins\":" << bins
     << ",\"counts\":[";
  for (int i = 0; i < bins; ++i) {
    if (i) os << ",";
    os << count[i];
  }
  os << "]}";
  return os.str();
}

}  // namespace liegraph
