#include "liegraph/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "liegraph/gaussian.hpp"
#include "liegraph/util.hpp"

namespace liegraph {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

double clamp1(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }

double killing_coeff(const SpaceSpec& s) {
  switch (s.kind) {
    case SpaceKind::SU: return 2.0 * s.n;
    case SpaceKind::SO: return s.n - 2.0;
    case SpaceKind::USp: return 4.0 * s.n + 4.0;  // quaternionic trace convention
    default: throw std::invalid_argument("no Killing coefficient for spheres");
  }
}

double sphere_surface(int n) {  // area of the unit n-sphere in R^{n+1}
  return 2.0 * std::pow(kPi, 0.5 * (n + 1)) / std::tgamma(0.5 * (n + 1));
}

}  // namespace

RootSystem space_root_system(const SpaceSpec& space) {
  switch (space.kind) {
    case SpaceKind::SU:
      return build_root_system(Family::A, space.n - 1);
    case SpaceKind::USp:
      return build_root_system(Family::C, space.n);
    case SpaceKind::SO:
      if (space.n == 3) return build_root_system(Family::A, 1);  // spin(3) = su(2)
      if (space.n % 2 == 1) return build_root_system_so(Family::B, (space.n - 1) / 2);
      return build_root_system_so(Family::D, space.n / 2);
    default:
      throw std::invalid_argument("spheres carry no root system here");
  }
}

SpaceSpec make_space(SpaceKind kind, int n) {
  SpaceSpec s{};
  s.kind = kind;
  s.n = n;
  switch (kind) {
    case SpaceKind::SU: {
      if (n < 2) throw std::invalid_argument("SU(n) needs n >= 2");
      s.dim = n * n - 1;
      s.vol = volumes(build_root_system(Family::A, n - 1)).vol_G_macdonald;
      s.diameter_hint = std::sqrt(2.0 * n * n * kPi * kPi);
      break;
    }
    case SpaceKind::SO: {
      if (n < 3) throw std::invalid_argument("SO(n) needs n >= 3");
      s.dim = n * (n - 1) / 2;
      if (n == 4) {
        s.vol = 0.0;  // Spin(4) is not simple; no volume attached
      } else {
        s.vol = 0.5 * volumes(space_root_system(s)).vol_G_macdonald;
      }
      s.diameter_hint = std::sqrt((n - 2.0) * n * kPi * kPi) + 1.0;
      break;
    }
    case SpaceKind::USp: {
      if (n < 2) throw std::invalid_argument("USp(n) needs n >= 2");
      s.dim = n * (2 * n + 1);
      s.vol = volumes(build_root_system(Family::C, n)).vol_G_macdonald;
      s.diameter_hint = std::sqrt((4.0 * n + 4.0) * n * kPi * kPi);
      break;
    }
    case SpaceKind::SphereR: {
      if (n < 1) throw std::invalid_argument("sphere needs n >= 1");
      s.dim = n;
      s.vol = sphere_surface(n);
      s.diameter_hint = kPi;
      break;
    }
  }
  return s;
}

namespace {

// modified Gram-Schmidt with one re-orthogonalization pass; the positive
// diagonal of R makes the Gaussian-to-Q map Haar
bool mgs_complex(CMatrix& a) {
  const int n = a.n;
  for (int j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < j; ++i) {
        cplx proj = 0.0;
        for (int r = 0; r < n; ++r) proj += std::conj(a.at(r, i)) * a.at(r, j);
        for (int r = 0; r < n; ++r) a.at(r, j) -= proj * a.at(r, i);
      }
    double nrm = 0.0;
    for (int r = 0; r < n; ++r) nrm += std::norm(a.at(r, j));
    nrm = std::sqrt(nrm);
    if (nrm < 1e-8) return false;
    for (int r = 0; r < n; ++r) a.at(r, j) /= nrm;
  }
  return true;
}

bool mgs_quaternion(QMatrix& a) {
  const int n = a.n;
  for (int j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < j; ++i) {
        Quaternion proj{};
        for (int r = 0; r < n; ++r) proj = proj + a.at(r, i).conj() * a.at(r, j);
        for (int r = 0; r < n; ++r) a.at(r, j) = a.at(r, j) - a.at(r, i) * proj;
      }
    double nrm = 0.0;
    for (int r = 0; r < n; ++r) nrm += a.at(r, j).norm2();
    nrm = std::sqrt(nrm);
    if (nrm < 1e-8) return false;
    for (int r = 0; r < n; ++r) a.at(r, j) = scale(a.at(r, j), 1.0 / nrm);
  }
  return true;
}

}  // namespace

Point haar_sample(const SpaceSpec& space, Rng& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    switch (space.kind) {
      case SpaceKind::SU: {
        CMatrix a = CMatrix::zero(space.n);
        for (cplx& c : a.a) c = cplx(rng.gaussian(), rng.gaussian());
        if (!mgs_complex(a)) continue;
        cplx d = det(a);
        cplx w = std::polar(1.0, -std::arg(d) / space.n);
        for (cplx& c : a.a) c *= w;
        return Point{a, {}};
      }
      case SpaceKind::SO: {
        CMatrix a = CMatrix::zero(space.n);
        for (cplx& c : a.a) c = cplx(rng.gaussian(), 0.0);
        if (!mgs_complex(a)) continue;
        if (det(a).real() < 0.0)
          for (int r = 0; r < space.n; ++r) a.at(r, space.n - 1) = -a.at(r, space.n - 1);
        return Point{a, {}};
      }
      case SpaceKind::USp: {
        QMatrix q;
        q.n = space.n;
        q.a.resize((size_t)space.n * space.n);
        for (Quaternion& x : q.a)
          x = {rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
        if (!mgs_quaternion(q)) continue;
        return Point{quaternion_embed(q), {}};
      }
      case SpaceKind::SphereR: {
        Vec v(space.n + 1);
        double nrm = 0.0;
        for (double& c : v) {
          c = rng.gaussian();
          nrm += c * c;
        }
        nrm = std::sqrt(nrm);
        if (nrm < 1e-8) continue;
        for (double& c : v) c /= nrm;
        return Point{{}, v};
      }
    }
  }
  throw std::runtime_error("haar_sample: degenerate Gaussian draws 100 times in a row");
}

double geodesic_distance_eigen(const SpaceSpec& space, const Point& p, const Point& q) {
  if (space.kind == SpaceKind::SphereR) return geodesic_distance(space, p, q);
  CMatrix m = matmul(p.m, adjoint(q.m));
  const int nm = m.n;
  if (space.kind == SpaceKind::SU) {
    std::vector<double> theta = unitary_eigenangles(m);
    double sum = 0.0;
    for (double t : theta) sum += t;
    double whole = sum / (2.0 * kPi);
    long long shifts = (long long)std::llround(whole);
    if (std::abs(whole - (double)shifts) > 1e-6)
      throw std::runtime_error("geodesic_distance: angle sum is not a multiple of 2 pi");
    while (shifts != 0) {
      // move the angle closest to the matching cut by a full turn
      size_t pick = 0;
      for (size_t i = 1; i < theta.size(); ++i)
        if (shifts > 0 ? theta[i] > theta[pick] : theta[i] < theta[pick]) pick = i;
      theta[pick] -= (shifts > 0 ? 2.0 : -2.0) * kPi;
      shifts += shifts > 0 ? -1 : 1;
    }
    double ss = 0.0;
    for (double t : theta) ss += t * t;
    return std::sqrt(killing_coeff(space) * ss);
  }
  // SO and embedded USp: angles come in +- pairs, so the symmetric part
  // determines them up to sign and the squared sum needs no branch logic
  CMatrix h = CMatrix::zero(nm);
  CMatrix ms = adjoint(m);
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nm; ++j) h.at(i, j) = 0.5 * (m.at(i, j) + ms.at(i, j));
  HermEig e = eig_hermitian(h);
  double ss = 0.0;
  for (double lam : e.values) {
    double t = std::acos(clamp1(lam));
    ss += t * t;
  }
  if (space.kind == SpaceKind::SO) return std::sqrt((space.n - 2.0) * ss);
  // USp: the 2n x 2n embedding doubles each +-theta pair
  return std::sqrt((2.0 * space.n + 2.0) * ss);
}

double geodesic_distance(const SpaceSpec& space, const Point& p, const Point& q) {
  switch (space.kind) {
    case SpaceKind::SphereR: {
      double dot = 0.0;
      for (size_t i = 0; i < p.v.size(); ++i) dot += p.v[i] * q.v[i];
      return std::acos(clamp1(dot));
    }
    case SpaceKind::SU:
      if (space.n == 2) {
        // tr(p q^dagger) = 2 cos(theta); Frobenius pairing avoids the eigensolver
        cplx t = 0.0;
        for (int i = 0; i < 4; ++i) t += p.m.a[i] * std::conj(q.m.a[i]);
        return 2.0 * std::sqrt(2.0) * std::acos(clamp1(0.5 * t.real()));
      }
      return geodesic_distance_eigen(space, p, q);
    default:
      return geodesic_distance_eigen(space, p, q);
  }
}

long long GeometricGraph::edge_count() const {
  long long e = 0;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) e += edge(i, j) ? 1 : 0;
  return e;
}

std::vector<int> GeometricGraph::degrees() const {
  std::vector<int> deg(N, 0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) deg[i] += edge(i, j) ? 1 : 0;
  return deg;
}

GeometricGraph build_geometric_graph(const SpaceSpec& space, int N, double L, Rng& rng) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
  GeometricGraph g;
  g.N = N;
  g.L = L;
  g.points.reserve(N);
  for (int i = 0; i < N; ++i) g.points.push_back(haar_sample(space, rng));
  g.adjacency.assign((size_t)N * N, 0);
  parallel_for(0, N, [&](long long i) {
    for (int j = (int)i + 1; j < N; ++j)
      if (geodesic_distance(space, g.points[i], g.points[j]) <= L) g.adjacency[i * N + j] = 1;
  });
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) g.adjacency[(size_t)j * N + i] = g.adjacency[(size_t)i * N + j];
  return g;
}

std::string graph_edge_list(const GeometricGraph& g) {
  std::ostringstream os;
  for (int i = 0; i < g.N; ++i)
    for (int j = i + 1; j < g.N; ++j)
      if (g.edge(i, j)) os << i << " " << j << "\n";
  return os.str();
}

std::string graph_header_json(const SpaceSpec& space, const GeometricGraph& g, uint64_t seed) {
  const char* kind = space.kind == SpaceKind::SU    ? "SU"
                     : space.kind == SpaceKind::SO  ? "SO"
                     : space.kind == SpaceKind::USp ? "USp"
                                                    : "SphereR";
  std::ostringstream os;
  os << "{\"space\":\"" << kind << "\",\"n\":" << space.n << ",\"N\":" << g.N
     << ",\"L\":" << format_double(g.L) << ",\"seed\":" << seed << "}";
  return os.str();
}

double ball_fraction(const SpaceSpec& space, double L) {
  if (space.kind == SpaceKind::SphereR) {
    // normalized volume of a spherical cap of geodesic radius L
    int n = space.n;
    double num = 0.0, den = 0.0;
    const int m = 2000;
    for (int i = 0; i < m; ++i) {
      double t = (i + 0.5) / m;
      num += std::pow(std::sin(t * L), n - 1) * L / m;
      den += std::pow(std::sin(t * kPi), n - 1) * kPi / m;
    }
    return num / den;
  }
  RootSystem rs = space_root_system(space);
  DominantWeight zero = rs.weight_from_fund(std::vector<int>(rs.rank, 0));
  return limiting_eigenvalue(rs, zero, L);
}

namespace {

// uniform point of the metric ball of radius L in the Lie algebra, returned
// together with its angle vector; rejection on the Weyl Jacobian happens in
// the caller
struct AlgebraSample {
  CMatrix x;                  // anti-Hermitian (complex embedding for SO/USp)
  std::vector<double> theta;  // eigen-angles of -iX
  double radius;
};

AlgebraSample algebra_ball_point(const SpaceSpec& space, double L, Rng& rng) {
  const int n = space.kind == SpaceKind::USp ? 2 * space.n : space.n;
  CMatrix x = CMatrix::zero(n);
  switch (space.kind) {
    case SpaceKind::SU: {
      CMatrix a = CMatrix::zero(n);
      for (cplx& c : a.a) c = cplx(rng.gaussian(), rng.gaussian());
      CMatrix ad = adjoint(a);
      cplx tr = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x.at(i, j) = 0.5 * (a.at(i, j) - ad.at(i, j));
      for (int i = 0; i < n; ++i) tr += x.at(i, i);
      for (int i = 0; i < n; ++i) x.at(i, i) -= tr / double(n);
      break;
    }
    case SpaceKind::SO: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          double g = rng.gaussian();
          x.at(i, j) = cplx(g, 0.0);
          x.at(j, i) = cplx(-g, 0.0);
        }
      break;
    }
    case SpaceKind::USp: {
      QMatrix q;
      q.n = space.n;
      q.a.resize((size_t)space.n * space.n);
      for (int i = 0; i < space.n; ++i)
        for (int j = i; j < space.n; ++j) {
          Quaternion g{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
          if (i == j) {
            q.at(i, i) = Quaternion{0.0, g.x, g.y, g.z};  // imaginary diagonal
          } else {
            q.at(i, j) = g;
            q.at(j, i) = scale(g.conj(), -1.0);
          }
        }
      x = quaternion_embed(q);
      break;
    }
    default:
      throw std::invalid_argument("ball_step supports group spaces only");
  }
  // Killing norm from the matrix entries
  double tr2 = 0.0;
  for (const cplx& c : x.a) tr2 += std::norm(c);
  double coeff = space.kind == SpaceKind::USp ? 2.0 * space.n + 2.0 : killing_coeff(space);
  double norm = std::sqrt(coeff * tr2);
  double radius = L * std::pow(rng.uniform(), 1.0 / space.dim);
  double scale_f = radius / norm;
  for (cplx& c : x.a) c *= scale_f;

  AlgebraSample out;
  out.radius = radius;
  // angles: eigenvalues of the Hermitian matrix -iX
  CMatrix h = CMatrix::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.at(i, j) = x.at(i, j) * cplx(0.0, -1.0);
  HermEig e = eig_hermitian(h);
  out.theta = e.values;
  // exp(X) = V diag(e^{i theta}) V^dagger
  CMatrix u = CMatrix::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (int c = 0; c < n; ++c)
        s += e.vectors.at(i, c) * std::polar(1.0, e.values[c]) * std::conj(e.vectors.at(j, c));
      u.at(i, j) = s;
    }
  out.x = u;
  return out;
}

// product over positive roots of sinc^2(alpha(theta)/2); the assignment of
// eigen-angles to e-slots is irrelevant because the product is Weyl-invariant
double exp_jacobian(const RootSystem& rs, std::vector<double> theta) {
  std::sort(theta.begin(), theta.end(), std::greater<double>());
  Vec coord(rs.coords, 0.0);
  for (int i = 0; i < rs.coords; ++i) coord[i] = theta[i];
  double j = 1.0;
  for (const Vec& a : rs.positive_roots) {
    double av = 0.0;
    for (int i = 0; i < rs.coords; ++i) av += a[i] * coord[i];
    av *= 0.5;
    double s = std::abs(av) < 1e-9 ? 1.0 - av * av / 6.0 : std::sin(av) / av;
    j *= s * s;
  }
  return j;
}

}  // namespace

Point ball_step(const SpaceSpec& space, const Point& base, double L, Rng& rng) {
  if (space.kind == SpaceKind::SphereR)
    throw std::invalid_argument("ball_step supports group spaces only");
  RootSystem rs = space_root_system(space);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    AlgebraSample s = algebra_ball_point(space, L, rng);
    if (rng.uniform() <= exp_jacobian(rs, s.theta)) {
      return Point{matmul(base.m, s.x), {}};
    }
  }
  throw std::runtime_error("ball_step: rejection sampling failed to accept");
}

}  // namespace liegraph
