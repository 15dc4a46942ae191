#include "liegraph/moments.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "liegraph/bessel.hpp"
#include "liegraph/gaussian.hpp"
#include "liegraph/util.hpp"

namespace liegraph {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
const double kSqrt2 = std::sqrt(2.0);

void require_a1(const RootSystem& rs) {
  if (rs.family != Family::A || rs.n != 1)
    throw std::invalid_argument("this operation is implemented for A1 (SU(2)) only");
}

// 8-point Gauss-Legendre on [-1, 1]
const double kGx[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                       -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                       0.7966664774136267,  0.9602898564975363};
const double kGw[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                       0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                       0.2223810344533745, 0.1012285362903763};

double panel_integrate(const std::function<double(double)>& f, double a, double b) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int g = 0; g < 8; ++g) s += kGw[g] * f(mid + half * kGx[g]);
  return s * half;
}

double composite_integrate(const std::function<double(double)>& f, double a, double b,
                           double panel) {
  int n = std::max(1, (int)std::ceil((b - a) / panel));
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += panel_integrate(f, a + (b - a) * i / n, a + (b - a) * (i + 1) / n);
  return s;
}

// W(u) = sin(u)/u - cos(u); the rank-1 derivative kernel is
// d_{-alpha} Jt (at metric radius u) = W(u) / (sqrt(pi) u)
double w_kernel(double u) {
  if (u < 1e-4) {
    double u2 = u * u;
    return u2 * u / 3.0 * (1.0 - u2 / 10.0 * (1.0 - u2 / 28.0));
  }
  return std::sin(u) / u - std::cos(u);
}

double p_kernel(double u) {
  if (u < 1e-8) return 0.0;
  return w_kernel(u) / (std::sqrt(kPi) * u);
}

// int_R^inf cos(mu)/u^p du and sin counterpart by the integration-by-parts
// recurrence, unwound from a zeroed deep level
void osc_tail(int m, int p, double R, double& c_out, double& s_out) {
  const int depth = 24;
  double c = 0.0, s = 0.0;
  for (int i = depth; i >= 0; --i) {
    int pi_ = p + i;
    double c_next = c, s_next = s;
    s = std::cos(m * R) / (m * std::pow(R, pi_)) - (double(pi_) / m) * c_next;
    c = -std::sin(m * R) / (m * std::pow(R, pi_)) + (double(pi_) / m) * s_next;
  }
  c_out = c;
  s_out = s;
}

// analytic tail of int_R^inf W(u)^k u^{-(2k-2)} du via the trigonometric
// expansion of W^k
double rank1_tail(int k, double R) {
  // W(u)^k = sum_{j} C(k,j) sin^j(u) (-cos(u))^{k-j} u^{-j}
  // expand sin^j cos^{k-j} in e^{imu}: coefficients via polynomial products
  double total = 0.0;
  std::vector<double> binom(k + 1, 1.0);
  for (int j = 1; j <= k; ++j) binom[j] = binom[j - 1] * double(k - j + 1) / double(j);
  for (int j = 0; j <= k; ++j) {
    // coefficients of (e^{iu} - e^{-iu})^j (e^{iu} + e^{-iu})^{k-j} / (2i)^j 2^{k-j}
    std::vector<std::complex<double>> poly(1, 1.0);  // in powers of e^{iu}, offset tracked
    int offset = 0;
    for (int t = 0; t < j; ++t) {  // multiply by (e^{iu} - e^{-iu})
      std::vector<std::complex<double>> next(poly.size() + 2, 0.0);
      for (size_t i = 0; i < poly.size(); ++i) {
        next[i + 2] += poly[i];
        next[i] -= poly[i];
      }
      poly = std::move(next);
      offset += 1;
    }
    for (int t = 0; t < k - j; ++t) {
      std::vector<std::complex<double>> next(poly.size() + 2, 0.0);
      for (size_t i = 0; i < poly.size(); ++i) {
        next[i + 2] += poly[i];
        next[i] += poly[i];
      }
      poly = std::move(next);
      offset += 1;
    }
    std::complex<double> denom = std::pow(std::complex<double>(0.0, 2.0), j) * std::pow(2.0, k - j);
    double sign = (k - j) % 2 == 0 ? 1.0 : -1.0;  // (-cos)^{k-j}
    int p = 2 * k - 2 + j;
    for (size_t i = 0; i < poly.size(); ++i) {
      int m = (int)i - offset;
      if (m < 0) continue;  // pair with conjugate below
      std::complex<double> coef = poly[i] / denom * sign * binom[j];
      if (m == 0) {
        total += coef.real() * std::pow(R, 1.0 - p) / (p - 1.0);
      } else {
        // e^{imu} and e^{-imu} combine: 2 Re(coef e^{imu})
        double c, s;
        osc_tail(m, p, R, c, s);
        total += 2.0 * (coef.real() * c - coef.imag() * s);
      }
    }
  }
  return total;
}

double one_vertex_a1(int k, double tail_rel_tol) {
  const double coef = std::pow(kSqrt2 * kPi, -double(k)) * std::pow(2.0 * kSqrt2, 2.0 - double(k));
  const double R0 = 400.0;
  auto g = [&](double u) { return std::pow(w_kernel(u), k) * std::pow(u, -(2.0 * k - 2.0)); };
  double bulk = composite_integrate(g, 0.0, R0, 0.5);
  double tail = rank1_tail(k, R0);
  double value = coef * (bulk + tail);
  // residual after the analytic tail: the osc_tail truncation, far below
  // any requested tolerance at R0 = 400
  double residual = std::pow(R0, -(2.0 * k + 20.0));
  if (residual > tail_rel_tol * std::abs(value) + 1e-300)
    throw std::runtime_error("one_vertex_integral: truncation bound not achieved");
  return value;
}

double one_vertex_a2(const RootSystem& rs, int k, double tail_rel_tol) {
  const double jac = 1.0 / volumes(rs).vol_t_mod_tZ;  // vol(RO/ZO)
  const double two_pi_pow = std::pow(2.0 * kPi, 0.5 * rs.rank * k);
  Vec x(rs.coords);
  auto integrand = [&](double t1, double t2) {
    for (int c = 0; c < rs.coords; ++c)
      x[c] = t1 * rs.fundamental_weights[0][c] + t2 * rs.fundamental_weights[1][c];
    double h = std::min(1e-2 * (1.0 + rs.norm(x)), 0.05);
    double p = partial_phi_minus(rs, x, h);
    double delta = 0.5 * t1 * t2 * (t1 + t2);
    return std::pow(p, k) / two_pi_pow / std::pow(delta, double(k - 2));
  };
  auto square_block = [&](double a1, double b1, double a2, double b2) {
    // tensor 6x6 Gauss panels of width ~2
    auto inner = [&](double t1) {
      return composite_integrate([&](double t2) { return integrand(t1, t2); }, a2, b2, 2.0);
    };
    return composite_integrate(inner, a1, b1, 2.0);
  };

  double T = 30.0;
  double acc = square_block(0.0, T, 0.0, T);
  double prev_shell = 0.0;
  double ratio = 0.0;
  const double grow = 1.3;
  for (int shell = 0; shell < 14; ++shell) {
    double T2 = T * grow;
    double s = square_block(T, T2, 0.0, T2) + square_block(0.0, T, T, T2);
    acc += s;
    double abs_s = std::abs(s);
    if (shell > 0 && prev_shell > 0.0) ratio = abs_s / prev_shell;
    prev_shell = std::max(abs_s, 1e-300);
    T = T2;
    if (shell >= 2) {
      double tail_est = ratio < 1.0 ? abs_s * ratio / (1.0 - ratio) : 1e300;
      double budget = tail_rel_tol * std::abs(acc) + 1e-300;
      if (tail_est <= budget) return acc * jac;
      // power-law decay projected to the radius cap: abandon early when the
      // requested tolerance is out of reach
      if (ratio > 0.0 && ratio < 1.0) {
        double per_shell = std::log(ratio);
        int shells_left = 14 - shell;
        double projected = abs_s * std::exp(per_shell * shells_left) / (1.0 - ratio);
        if (projected > budget)
          throw std::runtime_error(
              "one_vertex_integral: truncation bound not achieved for A2 at this tolerance");
      }
    }
  }
  throw std::runtime_error("one_vertex_integral: truncation bound not achieved");
}

}  // namespace

double c_coeff(const RootSystem& rs, const DominantWeight& lambda, double L) {
  return double(weyl_dimension(rs, lambda)) * limiting_eigenvalue(rs, lambda, L);
}

double one_vertex_integral(const RootSystem& rs, int k, double tail_rel_tol) {
  if (k < 2) throw std::invalid_argument("one_vertex_integral needs k >= 2");
  if (rs.family != Family::A || rs.n > 2)
    throw std::invalid_argument("one_vertex_integral is implemented for A1 and A2");
  return rs.n == 1 ? one_vertex_a1(k, tail_rel_tol) : one_vertex_a2(rs, k, tail_rel_tol);
}

namespace {

// prefix antiderivative of f on [0, hi] with on-demand Gauss refinement
struct Antiderivative {
  std::function<double(double)> f;
  double panel;
  std::vector<double> prefix;  // prefix[i] = int_0^{i*panel}
  explicit Antiderivative(std::function<double(double)> fn, double hi, double panel_w)
      : f(std::move(fn)), panel(panel_w) {
    int n = (int)std::ceil(hi / panel) + 2;
    prefix.assign(n + 1, 0.0);
    for (int i = 0; i < n; ++i)
      prefix[i + 1] = prefix[i] + panel_integrate(f, i * panel, (i + 1) * panel);
  }
  double operator()(double x) const {
    if (x <= 0.0) return 0.0;
    int i = std::min((int)(x / panel), (int)prefix.size() - 2);
    return prefix[i] + panel_integrate(f, i * panel, x);
  }
};

}  // namespace

double two_vertex_integral_su2(const std::vector<int>& a_labels) {
  if (a_labels.size() != 3) throw std::invalid_argument("two_vertex_integral_su2 expects r = 3");
  int a1 = a_labels[0], a2 = a_labels[1], a3 = a_labels[2];
  if (a1 < a2 || a2 < 2 || a3 < 1 || a3 > a2)
    throw std::invalid_argument("two_vertex_integral_su2 needs a1 >= a2 >= 2 and 1 <= a3 <= a2");
  int sum_a = a1 + a2 + a3;
  const double coef = 32.0 * std::pow(2.0 * kSqrt2, -double(sum_a)) *
                      std::pow(2.0 * kPi, -0.5 * double(sum_a));

  const double U = 80.0;
  auto fpow = [&](int a) {
    return [a](double u) {
      if (u < 1e-8) return 0.0;
      return std::pow(p_kernel(u), a) * std::pow(u, -(double(a) - 1.0));
    };
  };
  Antiderivative F3(fpow(a3), 2.0 * U + 1.0, 0.5);
  auto f1 = fpow(a1), f2 = fpow(a2);
  auto inner = [&](double u1) {
    auto g = [&](double u2) {
      double lo = std::abs(u1 - u2), hi = u1 + u2;
      return f2(u2) * (F3(hi) - F3(lo));
    };
    return f1(u1) * composite_integrate(g, 0.0, U, 0.5);
  };
  double integral = composite_integrate(inner, 0.0, U, 0.5);
  return coef * integral;
}

double two_vertex_embedding_limit(const RootSystem& rs, const std::vector<int>& a_labels) {
  long long sum_a = 0;
  for (int a : a_labels) sum_a += a;
  long long k = sum_a - ((long long)a_labels.size() - 2);
  GroupVolumes v = volumes(rs);
  return std::pow(v.vol_G_macdonald / v.vol_t_mod_tZ, double(k - 1));
}

namespace {

Circuit find_circuit_with_reduction(int s, const std::string& reduction_key) {
  for (const Circuit& c : enumerate_circuits(s))
    if (reduce_circuit(c).key() == reduction_key) return c;
  throw std::logic_error("no circuit of length " + std::to_string(s) + " reduces to " + reduction_key);
}

ReducedCircuit two_vertex_reduction(const std::vector<int>& labels) {
  std::vector<std::pair<std::pair<int, int>, long long>> edges;
  for (int l : labels) edges.push_back({{0, 1}, l});
  return reduce_multigraph(2, edges);
}

}  // namespace

LimitMomentTable limiting_moments(const RootSystem& rs, double ell, int s_max, Rng& rng,
                                  int sim_trials) {
  require_a1(rs);
  if (s_max < 2 || s_max > 7) throw std::invalid_argument("limiting_moments supports 2 <= s_max <= 7");
  LimitMomentTable t;
  t.ell = ell;
  t.ell_prime = ell / volumes(rs).vol_t_mod_tZ;
  t.s_max = s_max;
  t.I.assign(8, 0.0);
  for (int k = 2; k <= s_max; ++k) t.I[k] = one_vertex_integral(rs, k);
  const double lp = t.ell_prime;
  t.M.assign(s_max + 1, MomentTerm{});

  auto quad = [&](int s, double v) {
    t.M[s].value = v;
    t.M[s].provenance = "quadrature";
  };
  quad(2, t.I[2] * lp);
  if (s_max >= 3) quad(3, t.I[3] * lp * lp);
  if (s_max >= 4) quad(4, t.I[4] * std::pow(lp, 3) + 2.0 * t.I[2] * t.I[2] * lp * lp + t.I[2] * lp);
  if (s_max >= 5)
    quad(5, t.I[5] * std::pow(lp, 4) + 5.0 * t.I[3] * t.I[2] * std::pow(lp, 3) +
                5.0 * t.I[3] * lp * lp);
  if (s_max >= 6) {
    t.I221 = two_vertex_integral_su2({2, 2, 1});
    // the three-loop class of length-6 circuits has 5 members (independently
    // enumerated), which fixes the (I_2)^3 coefficient
    double m6 = t.I[6] * std::pow(lp, 5) +
                (6.0 * t.I[4] * t.I[2] + 3.0 * t.I[3] * t.I[3]) * std::pow(lp, 4) +
                (6.0 * t.I[4] + 5.0 * std::pow(t.I[2], 3) + 9.0 * t.I221) * std::pow(lp, 3) +
                (6.0 * t.I[2] * t.I[2] + 4.0 * t.I[3]) * lp * lp + t.I[2] * lp;
    quad(6, m6);
  }
  if (s_max >= 7) {
    // the (3,2,1) and (2,2,2,1) two-vertex terms come from Boolean-model
    // embedding counts at intensity 1
    double scale321 = two_vertex_embedding_limit(rs, {3, 2, 1});
    double scale2221 = two_vertex_embedding_limit(rs, {2, 2, 2, 1});
    Circuit c321 = find_circuit_with_reduction(7, two_vertex_reduction({3, 2, 1}).key());
    Circuit c2221 = find_circuit_with_reduction(7, two_vertex_reduction({2, 2, 2, 1}).key());
    double i321 =
        embedding_count_estimate(circuit_graph(c321), rs.dim_group, 1.0, sim_trials, rng) / scale321;
    double i2221 =
        embedding_count_estimate(circuit_graph(c2221), rs.dim_group, 1.0, sim_trials, rng) / scale2221;
    // the loop3+loop2 class of length-7 circuits has 42 members
    double m7 = t.I[7] * std::pow(lp, 6) +
                (7.0 * t.I[5] * t.I[2] + 7.0 * t.I[4] * t.I[3]) * std::pow(lp, 5) +
                (7.0 * t.I[5] + 21.0 * t.I[3] * t.I[2] * t.I[2] + 21.0 * i321 + 7.0 * i2221) *
                    std::pow(lp, 4) +
                (28.0 * t.I221 + 42.0 * t.I[3] * t.I[2]) * std::pow(lp, 3) +
                21.0 * t.I[3] * lp * lp;
    t.M[7].value = m7;
    t.M[7].provenance = "simulated";
  }
  return t;
}

std::string moment_table_json(const LimitMomentTable& t) {
  std::ostringstream os;
  os << "{\"ell\":" << format_double(t.ell) << ",\"ell_prime\":" << format_double(t.ell_prime)
     << ",\"I\":{";
  bool first = true;
  for (int k = 2; (size_t)k < t.I.size(); ++k) {
    if (t.I[k] == 0.0) continue;
    if (!first) os << ",";
    first = false;
    os << "\"I" << k << "\":" << format_double(t.I[k]);
  }
  if (t.I221 != 0.0) os << ",\"I221\":" << format_double(t.I221);
  os << "},\"M\":[";
  first = true;
  for (int s = 2; s <= t.s_max; ++s) {
    if (!first) os << ",";
    first = false;
    os << "{\"s\":" << s << ",\"value\":" << format_double(t.M[s].value) << ",\"provenance\":\""
       << t.M[s].provenance << "\"}";
  }
  os << "]}";
  return os.str();
}

GfEstimate graph_functional_estimate(const FunctionalGraph& graph, const std::vector<int>& weights,
                                     long long samples, Rng& rng) {
  if (weights.size() != graph.edges.size())
    throw std::invalid_argument("one weight per edge required");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  // SU(2) points as unit quaternions; ch_k(g) = U_k(cos theta)
  auto chebyshev_u = [](int k, double x) {
    double u0 = 1.0, u1 = 2.0 * x;
    if (k == 0) return u0;
    for (int i = 2; i <= k; ++i) {
      double u2 = 2.0 * x * u1 - u0;
      u0 = u1;
      u1 = u2;
    }
    return u1;
  };
  std::vector<std::array<double, 4>> g(graph.vertices);
  double sum = 0.0, sum2 = 0.0;
  for (long long t = 0; t < samples; ++t) {
    for (int v = 0; v < graph.vertices; ++v) {
      double nrm = 0.0;
      for (int c = 0; c < 4; ++c) {
        g[v][c] = rng.gaussian();
        nrm += g[v][c] * g[v][c];
      }
      nrm = std::sqrt(std::max(nrm, 1e-300));
      for (int c = 0; c < 4; ++c) g[v][c] /= nrm;
    }
    double prod = 1.0;
    for (size_t e = 0; e < graph.edges.size(); ++e) {
      auto [a, b] = graph.edges[e];
      double cosang;
      if (a == b) {
        cosang = 1.0;
      } else {
        cosang = 0.0;
        for (int c = 0; c < 4; ++c) cosang += g[a][c] * g[b][c];
        if (cosang > 1.0) cosang = 1.0;
        if (cosang < -1.0) cosang = -1.0;
      }
      prod *= chebyshev_u(weights[e], cosang);
    }
    sum += prod;
    sum2 += prod * prod;
  }
  GfEstimate out;
  out.value = sum / double(samples);
  double var = std::max(0.0, sum2 / double(samples) - out.value * out.value);
  out.stderr_ = std::sqrt(var / double(samples));
  return out;
}

double circuit_moment_estimate(const SpaceSpec& space, int s, int N, double ell, int trials,
                               Rng& rng) {
  double total = 0.0;
  for (const ExpansionRow& row : expansion_table(s)) {
    double falling = 1.0;
    for (long long i = 1; i < row.k; ++i) falling *= double(N - i);
    total += double(row.multiplicity) * falling * estimate_E_R(space, row.reduction, N, ell, trials, rng);
  }
  return total;
}

}  // namespace liegraph
