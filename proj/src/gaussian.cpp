#include "liegraph/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "liegraph/bessel.hpp"
#include "liegraph/util.hpp"

namespace liegraph {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

void check_level(double L) {
  if (!(L > 0.0) || L >= kPi)
    throw std::invalid_argument("level L must lie in (0, pi); the torus reduction needs L < pi");
}

}  // namespace

double limiting_eigenvalue(const RootSystem& rs, const DominantWeight& lambda, double L) {
  check_level(L);
  Vec lam = rs.weight_vec(lambda);
  Vec lam_rho(rs.coords);
  for (int i = 0; i < rs.coords; ++i) lam_rho[i] = lam[i] + rs.rho[i];

  double sum = 0.0;
  Vec arg(rs.coords);
  for_each_weyl(rs, [&](const WeylElement& w) {
    Vec wr = weyl_apply(rs, w, rs.rho);
    for (int i = 0; i < rs.coords; ++i) arg[i] = L * (lam_rho[i] - wr[i]);
    sum += w.sign * jtilde(rs, arg);
  });

  double d_lambda = (double)weyl_dimension(rs, lambda);
  double vol_t = volumes(rs).vol_t_mod_tZ;
  return sum * std::pow(L / std::sqrt(2.0 * kPi), rs.rank) / (d_lambda * vol_t);
}

namespace {

// Re[A_{lambda+rho}(X) * conj(A_rho(X))] with A_mu the alternating
// exponential sum; no character division, stable at the chamber walls.
// Ball points X are parametrized by their metric-dual weight vectors y, so
// the pairing mu(X) is the weight-space inner product <mu, y>.
double character_density(const RootSystem& rs, const Vec& lam_rho, const Vec& y) {
  std::complex<double> num(0.0, 0.0), den(0.0, 0.0);
  for_each_weyl(rs, [&](const WeylElement& w) {
    Vec t = weyl_apply(rs, w, y);
    num += double(w.sign) * std::polar(1.0, rs.inner(lam_rho, t));
    den += double(w.sign) * std::polar(1.0, rs.inner(rs.rho, t));
  });
  return (num * std::conj(den)).real();
}

double quadrature_pass(const RootSystem& rs, const Vec& lam_rho, double L, int nr, int nphi) {
  // integrate over the metric ball ||X|| <= L in the Cartan algebra using an
  // orthonormal polar grid; family A embeds the rank-d plane into the
  // sum-zero hyperplane, B/C use scaled coordinates
  const int d = rs.rank;
  double total = 0.0;
  if (d == 1) {
    // X = u * t1 with t1 unit vector in the metric
    Vec t1;
    double scale;
    if (rs.family == Family::A) {
      t1 = {1.0, -1.0};
      scale = rs.norm(t1);
    } else {
      t1 = {1.0};
      scale = rs.norm(t1);
    }
    for (double& c : t1) c /= scale;
    // Gauss-Legendre on [-L, L]
    for (int i = 0; i < nr; ++i) {
      double a = -L + 2.0 * L * i / nr, b = a + 2.0 * L / nr;
      static const double gx[4] = {-0.861136311594052575, -0.339981043584856265, 0.339981043584856265,
                                   0.861136311594052575};
      static const double gw[4] = {0.347854845137453857, 0.652145154862546143, 0.652145154862546143,
                                   0.347854845137453857};
      for (int g = 0; g < 4; ++g) {
        double u = 0.5 * (a + b) + 0.5 * (b - a) * gx[g];
        Vec y(rs.coords);
        for (int c = 0; c < rs.coords; ++c) y[c] = u * t1[c];
        total += 0.5 * (b - a) * gw[g] * character_density(rs, lam_rho, y);
      }
    }
    return total;
  }
  if (d != 2) throw std::invalid_argument("quadrature oracle limited to rank <= 2");

  // orthonormal frame in the metric
  Vec t1, t2;
  if (rs.family == Family::A) {
    t1 = {1.0, -1.0, 0.0};
    t2 = {1.0, 1.0, -2.0};
  } else {
    t1 = {1.0, 0.0};
    t2 = {0.0, 1.0};
  }
  double s1 = rs.norm(t1), s2 = rs.norm(t2);
  for (double& c : t1) c /= s1;
  for (double& c : t2) c /= s2;

  static const double gx[4] = {-0.861136311594052575, -0.339981043584856265, 0.339981043584856265,
                               0.861136311594052575};
  static const double gw[4] = {0.347854845137453857, 0.652145154862546143, 0.652145154862546143,
                               0.347854845137453857};
  for (int i = 0; i < nr; ++i) {
    double a = L * i / nr, b = L * (i + 1) / nr;
    for (int g = 0; g < 4; ++g) {
      double r = 0.5 * (a + b) + 0.5 * (b - a) * gx[g];
      double wr = 0.5 * (b - a) * gw[g] * r;  // polar Jacobian
      double ring = 0.0;
      for (int j = 0; j < nphi; ++j) {
        double phi = 2.0 * kPi * j / nphi;
        double c1 = r * std::cos(phi), c2 = r * std::sin(phi);
        Vec y(rs.coords);
        for (int c = 0; c < rs.coords; ++c) y[c] = c1 * t1[c] + c2 * t2[c];
        ring += character_density(rs, lam_rho, y);
      }
      total += wr * ring * (2.0 * kPi / nphi);
    }
  }
  return total;
}

}  // namespace

double limiting_eigenvalue_quadrature(const RootSystem& rs, const DominantWeight& lambda, double L) {
  check_level(L);
  if (rs.rank > 2) throw std::invalid_argument("quadrature oracle limited to rank <= 2");
  Vec lam = rs.weight_vec(lambda);
  Vec lam_rho(rs.coords);
  for (int i = 0; i < rs.coords; ++i) lam_rho[i] = lam[i] + rs.rho[i];

  double d_lambda = (double)weyl_dimension(rs, lambda);
  double vol_t = volumes(rs).vol_t_mod_tZ;
  double norm = d_lambda * double(rs.weyl_order) * vol_t * std::pow(2.0 * kPi, rs.rank);

  int nr = 24, nphi = 72;
  // keep a few nodes per oscillation of the largest phase
  double freq = rs.norm(lam_rho) * L;
  nr = std::max(nr, (int)(4.0 * freq));
  nphi = std::max(nphi, (int)(12.0 * freq));
  double coarse = quadrature_pass(rs, lam_rho, L, nr, nphi) / norm;
  double fine = quadrature_pass(rs, lam_rho, L, nr * 2, nphi * 2) / norm;
  if (std::abs(fine - coarse) > 1e-7 * (1.0 + std::abs(fine)) + 1e-12)
    throw std::runtime_error("character quadrature did not converge: " + format_double(coarse) + " vs " +
                             format_double(fine));
  return fine;
}

std::vector<SpectralLine> limiting_spectrum(const RootSystem& rs, double L, double cutoff) {
  check_level(L);
  std::vector<DominantWeight> weights = enumerate_dominant_weights(rs, cutoff);
  std::vector<SpectralLine> lines(weights.size());
  parallel_for(0, (long long)weights.size(), [&](long long i) {
    lines[i].lambda = weights[i];
    long long d = weyl_dimension(rs, weights[i]);
    lines[i].multiplicity = d * d;
    lines[i].c = limiting_eigenvalue(rs, weights[i], L);
  });
  std::stable_sort(lines.begin(), lines.end(), [](const SpectralLine& a, const SpectralLine& b) {
    if (std::abs(a.c - b.c) > 1e-14) return a.c > b.c;
    return a.lambda.fund < b.lambda.fund;
  });
  return lines;
}

RadiusGap spectral_radius_gap(const RootSystem& rs, double L, double cutoff) {
  std::vector<SpectralLine> lines = limiting_spectrum(rs, L, cutoff);
  if (lines.size() < 2)
    throw std::invalid_argument("cutoff too small to certify the spectral gap (need at least 2 lines)");
  const std::vector<int> zero(rs.rank, 0);
  RadiusGap out{};
  double c0 = 0.0, best = -1e300;
  for (const SpectralLine& s : lines) {
    if (s.lambda.fund == zero) {
      c0 = s.c;
    } else if (s.c > best) {
      best = s.c;
      out.runner_up = s.lambda;
    }
  }
  out.radius_coeff = c0;
  out.gap_coeff = c0 - best;
  return out;
}

std::string spectrum_to_csv(const std::vector<SpectralLine>& lines) {
  std::ostringstream os;
  os << "lambda_coords,c,multiplicity\n";
  for (const SpectralLine& s : lines) {
    os << "\"";
    for (size_t i = 0; i < s.lambda.fund.size(); ++i) {
      if (i) os << " ";
      os << s.lambda.fund[i];
    }
    os << "\"," << format_double(s.c) << "," << s.multiplicity << "\n";
  }
  return os.str();
}

}  // namespace liegraph
