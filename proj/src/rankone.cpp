#include "liegraph/rankone.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "liegraph/util.hpp"

namespace liegraph {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

// standard Jacobi polynomial P_k^{(al,be)}(x) on [-1,1], three-term recurrence
double jacobi_std(double al, double be, int k, double x) {
  if (k == 0) return 1.0;
  double p0 = 1.0;
  double p1 = 0.5 * (al - be + (al + be + 2.0) * x);
  for (int m = 2; m <= k; ++m) {
    double a = 2.0 * m * (m + al + be) * (2.0 * m + al + be - 2.0);
    double b = (2.0 * m + al + be - 1.0) *
               ((2.0 * m + al + be) * (2.0 * m + al + be - 2.0) * x + al * al - be * be);
    double c = 2.0 * (m + al - 1.0) * (m + be - 1.0) * (2.0 * m + al + be);
    double p2 = (b * p1 - c * p0) / a;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double jacobi_std_at_one(double al, int k) {
  // binomial(k+al, k)
  double v = 1.0;
  for (int m = 1; m <= k; ++m) v *= (al + m) / double(m);
  return v;
}

long long binom_ll(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

double falling(double p, int j) {
  double v = 1.0;
  for (int i = 0; i < j; ++i) v *= (p - i);
  return v;
}

double sin_power_integral(int m, double upper) {
  // int_0^upper sin^m(t) dt by the reduction formula
  if (m == 0) return upper;
  if (m == 1) return 1.0 - std::cos(upper);
  return (-std::cos(upper) * std::pow(std::sin(upper), m - 1) +
          (m - 1) * sin_power_integral(m - 2, upper)) /
         double(m);
}

}  // namespace

RankOneSpace make_rankone(RankOneKind kind, int n) {
  RankOneSpace s{};
  s.kind = kind;
  s.n = n;
  switch (kind) {
    case RankOneKind::SphereR:
      if (n < 1) throw std::invalid_argument("sphere dimension must be >= 1");
      s.beta_a = 0.5;
      s.beta_b = 0.5 * n;  // law of x^2
      s.dimension = n;
      break;
    case RankOneKind::ProjR:
      if (n < 2) throw std::invalid_argument("projective dimension must be >= 2");
      s.beta_a = 0.5;
      s.beta_b = 0.5 * n;
      s.dimension = n;
      break;
    case RankOneKind::ProjC:
      if (n < 2) throw std::invalid_argument("projective dimension must be >= 2");
      s.beta_a = 1.0;
      s.beta_b = n;
      s.dimension = 2 * n;
      break;
    case RankOneKind::ProjH:
      if (n < 2) throw std::invalid_argument("projective dimension must be >= 2");
      s.beta_a = 2.0;
      s.beta_b = 2.0 * n;
      s.dimension = 4 * n;
      break;
    case RankOneKind::ProjO2:
      s.n = 2;
      s.beta_a = 4.0;
      s.beta_b = 8.0;
      s.dimension = 16;
      break;
  }
  return s;
}

double legendre_p(double n, int k, double t) {
  if (t < -1.0 - 1e-12 || t > 1.0 + 1e-12)
    throw std::invalid_argument("legendre argument outside [-1,1]");
  double al = 0.5 * n - 1.0;
  return jacobi_std(al, al, k, t) / jacobi_std_at_one(al, k);
}

double jacobi_j(double a, double b, int k, double s) {
  if (s < -1e-12 || s > 1.0 + 1e-12) throw std::invalid_argument("jacobi argument outside [0,1]");
  return jacobi_std(b - 1.0, a - 1.0, k, 2.0 * s - 1.0) / jacobi_std_at_one(b - 1.0, k);
}

double orthopoly_eval(const RankOneSpace& space, int k, double t) {
  if (k < 0) throw std::invalid_argument("polynomial degree must be >= 0");
  if (space.kind == RankOneKind::SphereR) return legendre_p(space.n, k, t);
  return jacobi_j(space.beta_a, space.beta_b, k, t);
}

double legendre_p_rodrigues(double n, int k, double t) {
  // (-1)^k Gamma(n/2) / (2^k Gamma(n/2+k)) (1-t^2)^{1-n/2} d^k/dt^k (1-t^2)^{n/2+k-1}
  // expand (1-t^2)^p = (1-t)^p (1+t)^p and differentiate with Leibniz
  double p = 0.5 * n + k - 1.0;
  double sum = 0.0;
  for (int j = 0; j <= k; ++j) {
    double term = double(binom_ll(k, j)) * falling(p, j) * std::pow(1.0 - t, p - j) *
                  std::pow(-1.0, j) * falling(p, k - j) * std::pow(1.0 + t, p - (k - j));
    sum += term;
  }
  double pref = 1.0 / std::pow(2.0, k) * std::pow(1.0 - t * t, 1.0 - 0.5 * n);
  for (int m = 0; m < k; ++m) pref /= (0.5 * n + m);  // Gamma(n/2)/Gamma(n/2+k)
  return (k % 2 == 0 ? 1.0 : -1.0) * pref * sum;
}

double jacobi_j_rodrigues(double a, double b, int k, double s) {
  // (-1)^k Gamma(b)/Gamma(b+k) s^{1-a} (1-s)^{1-b} d^k/ds^k (s^{a+k-1} (1-s)^{b+k-1})
  double sum = 0.0;
  for (int j = 0; j <= k; ++j) {
    double term = double(binom_ll(k, j)) * falling(a + k - 1.0, j) * std::pow(s, a + k - 1.0 - j) *
                  std::pow(-1.0, k - j) * falling(b + k - 1.0, k - j) *
                  std::pow(1.0 - s, b + k - 1.0 - (k - j));
    sum += term;
  }
  double pref = std::pow(s, 1.0 - a) * std::pow(1.0 - s, 1.0 - b);
  for (int m = 0; m < k; ++m) pref /= (b + m);
  return std::pow(-1.0, k) * pref * sum;
}

double rankone_eigenvalue(const RankOneSpace& space, int k, double L) {
  if (k < 0) throw std::invalid_argument("index k must be >= 0");
  const int n = space.n;
  if (space.kind == RankOneKind::SphereR) {
    if (!(L > 0.0) || L >= kPi) throw std::invalid_argument("sphere level must lie in (0, pi)");
    double full = sin_power_integral(n - 1, kPi);
    if (k == 0) return sin_power_integral(n - 1, L) / full;
    return std::pow(std::sin(L), n) / (double(n) * full) * legendre_p(n + 2.0, k - 1, std::cos(L));
  }
  if (!(L > 0.0) || L >= 0.5 * kPi)
    throw std::invalid_argument("projective level must lie in (0, pi/2)");
  double c = std::cos(L), s = std::sin(L), c2 = c * c;
  switch (space.kind) {
    case RankOneKind::ProjR: {
      if (k == 0) return sin_power_integral(n - 1, L) / sin_power_integral(n - 1, 0.5 * kPi);
      double pref = std::tgamma(0.5 * (n + 1.0)) / (std::tgamma(0.5) * std::tgamma(0.5 * n + 1.0));
      return pref * c * std::pow(s, n) * jacobi_j(1.5, 0.5 * n + 1.0, k - 1, c2);
    }
    case RankOneKind::ProjC: {
      if (k == 0) return std::pow(s, 2 * n);
      return c2 * std::pow(s, 2 * n) * jacobi_j(2.0, n + 1.0, k - 1, c2);
    }
    case RankOneKind::ProjH: {
      if (k == 0) return std::pow(s, 4 * n) * (1.0 + 2.0 * n * c2);
      return (2.0 * n + 1.0) * c2 * c2 * std::pow(s, 4 * n) * jacobi_j(3.0, 2.0 * n + 1.0, k - 1, c2);
    }
    case RankOneKind::ProjO2: {
      if (k == 0) return std::pow(s, 16) * (1.0 + 8.0 * c2 + 36.0 * c2 * c2 + 120.0 * c2 * c2 * c2);
      return 165.0 * std::pow(c, 8) * std::pow(s, 16) * jacobi_j(5.0, 9.0, k - 1, c2);
    }
    default: break;
  }
  throw std::logic_error("unreachable rank-one kind");
}

long long rankone_multiplicity(const RankOneSpace& space, int k) {
  if (k < 0) throw std::invalid_argument("index k must be >= 0");
  if (k == 0) return 1;
  const long long n = space.n;
  auto exact_div = [](long long num, long long den) {
    if (num % den != 0) throw std::logic_error("multiplicity table division not exact");
    return num / den;
  };
  switch (space.kind) {
    case RankOneKind::SphereR:
      return exact_div((2 * k + n - 1) * binom_ll(k + n - 1, n - 1), k + n - 1);
    case RankOneKind::ProjR:
      return exact_div((4 * k + n - 1) * binom_ll(2 * k + n - 1, n - 1), 2 * k + n - 1);
    case RankOneKind::ProjC: {
      long long b = binom_ll(k + n - 1, n - 1);
      return exact_div((2 * k + n) * b * b, n);
    }
    case RankOneKind::ProjH:
      return exact_div((2 * k + 2 * n + 1) * binom_ll(k + 2 * n, 2 * n) * binom_ll(k + 2 * n - 1, 2 * n - 1),
                       (2 * n + 1) * (k + 1));
    case RankOneKind::ProjO2:
      return exact_div((2 * k + 11) * binom_ll(k + 7, 4) * binom_ll(k + 10, 10), 385);
  }
  return 0;
}

std::string rankone_to_csv(const RankOneSpace& space, double L, int k_max) {
  std::ostringstream os;
  os << "k,c_k,d_k\n";
  for (int k = 0; k <= k_max; ++k)
    os << k << "," << format_double(rankone_eigenvalue(space, k, L)) << ","
       << rankone_multiplicity(space, k) << "\n";
  return os.str();
}

}  // namespace liegraph
