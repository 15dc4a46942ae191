#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "liegraph/geometry.hpp"
#include "liegraph/poisson.hpp"
#include "liegraph/rng.hpp"

using namespace liegraph;

namespace {
const double kPi = 3.141592653589793238462643383279503;
const double kS2 = std::sqrt(2.0);
}  // namespace

TEST_CASE("space specs") {
  SpaceSpec su2 = make_space(SpaceKind::SU, 2);
  CHECK(su2.dim == 3);
  CHECK(su2.vol == doctest::Approx(32.0 * kS2 * kPi * kPi).epsilon(1e-12));
  CHECK(make_space(SpaceKind::SU, 3).dim == 8);
  CHECK(make_space(SpaceKind::SO, 3).dim == 3);
  CHECK(make_space(SpaceKind::USp, 2).dim == 10);
  CHECK(make_space(SpaceKind::SphereR, 2).vol == doctest::Approx(4.0 * kPi).epsilon(1e-12));
  // vol(SO(n)) = vol(Spin(n)) / 2
  SpaceSpec so5 = make_space(SpaceKind::SO, 5);
  RootSystem b2 = build_root_system(Family::B, 2);
  CHECK(so5.vol == doctest::Approx(0.5 * volumes(b2).vol_G_macdonald).epsilon(1e-12));
  SpaceSpec so6 = make_space(SpaceKind::SO, 6);
  RootSystem d3 = build_root_system(Family::D, 3);
  CHECK(so6.vol == doctest::Approx(0.5 * volumes(d3).vol_G_macdonald).epsilon(1e-12));
  CHECK(make_space(SpaceKind::SO, 3).vol ==
        doctest::Approx(16.0 * kS2 * kPi * kPi).epsilon(1e-12));
  CHECK_THROWS_AS(make_space(SpaceKind::SU, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_space(SpaceKind::SO, 2), std::invalid_argument);
}

TEST_CASE("haar samples are unitary with unit determinant") {
  Rng rng(2);
  for (SpaceKind kind : {SpaceKind::SU, SpaceKind::SO, SpaceKind::USp}) {
    SpaceSpec sp = make_space(kind, kind == SpaceKind::SU ? 3 : kind == SpaceKind::SO ? 4 : 2);
    for (int t = 0; t < 50; ++t) {
      Point p = haar_sample(sp, rng);
      CHECK(unitary_residual(p.m) < 1e-12);
      if (kind != SpaceKind::USp) CHECK(std::abs(det(p.m) - cplx(1.0, 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("SU(2) second moment of the trace is 1") {
  SpaceSpec su2 = make_space(SpaceKind::SU, 2);
  Rng rng(3);
  const int samples = 100000;
  double sum = 0.0;
  for (int i = 0; i < samples; ++i) {
    double tr = trace(haar_sample(su2, rng).m).real();
    sum += tr * tr;
  }
  double mean = sum / samples;
  // Var((tr U)^2) = 1, so 3 sigma of the mean is 3/sqrt(samples)
  CHECK(std::abs(mean - 1.0) <= 3.0 / std::sqrt((double)samples));
}

TEST_CASE("SO(3) has no trivial component in the geometric representation") {
  SpaceSpec so3 = make_space(SpaceKind::SO, 3);
  Rng rng(5);
  const int samples = 100000;
  double sum = 0.0;
  for (int i = 0; i < samples; ++i) sum += trace(haar_sample(so3, rng).m).real();
  CHECK(std::abs(sum / samples) <= 3.0 / std::sqrt((double)samples));
}

TEST_CASE("SU(2) closed-form distance equals the eigen-angle route") {
  SpaceSpec su2 = make_space(SpaceKind::SU, 2);
  Rng rng(7);
  for (int t = 0; t < 1000; ++t) {
    Point p = haar_sample(su2, rng), q = haar_sample(su2, rng);
    double fast = geodesic_distance(su2, p, q);
    double eig = geodesic_distance_eigen(su2, p, q);
    CHECK(std::abs(fast - eig) < 1e-10);
    // closed form 2 sqrt2 |theta| from the eigenvalues of p q^{-1}
    cplx tr = trace(matmul(p.m, adjoint(q.m)));
    double theta = std::acos(std::min(1.0, std::max(-1.0, 0.5 * tr.real())));
    CHECK(std::abs(fast - 2.0 * kS2 * theta) < 1e-10);
  }
}

TEST_CASE("SU(2) diameter") {
  SpaceSpec su2 = make_space(SpaceKind::SU, 2);
  Point e, minus_e;
  e.m = CMatrix::identity(2);
  minus_e.m = CMatrix::identity(2);
  minus_e.m.at(0, 0) = minus_e.m.at(1, 1) = -1.0;
  CHECK(geodesic_distance(su2, e, minus_e) == doctest::Approx(2.0 * kS2 * kPi).epsilon(1e-12));
  CHECK(su2.diameter_hint >= 2.0 * kS2 * kPi - 1e-9);
}

TEST_CASE("metric axioms on random points") {
  Rng rng(11);
  for (SpaceKind kind : {SpaceKind::SU, SpaceKind::SO, SpaceKind::USp, SpaceKind::SphereR}) {
    int n = kind == SpaceKind::SU ? 3 : kind == SpaceKind::SO ? 4 : 2;
    SpaceSpec sp = make_space(kind, n);
    for (int t = 0; t < 30; ++t) {
      Point p = haar_sample(sp, rng), q = haar_sample(sp, rng);
      CHECK(geodesic_distance(sp, p, p) <= 1e-6);
      CHECK(geodesic_distance(sp, p, q) ==
            doctest::Approx(geodesic_distance(sp, q, p)).epsilon(1e-10));
    }
  }
}

TEST_CASE("bi-invariance of the group distances") {
  Rng rng(13);
  for (SpaceKind kind : {SpaceKind::SU, SpaceKind::SO, SpaceKind::USp}) {
    int n = kind == SpaceKind::SU ? 3 : kind == SpaceKind::SO ? 4 : 2;
    SpaceSpec sp = make_space(kind, n);
    for (int t = 0; t < 25; ++t) {
      Point g = haar_sample(sp, rng), p = haar_sample(sp, rng), q = haar_sample(sp, rng);
      double d = geodesic_distance(sp, p, q);
      Point gp{matmul(g.m, p.m), {}}, gq{matmul(g.m, q.m), {}};
      CHECK(std::abs(geodesic_distance(sp, gp, gq) - d) <= 1e-10);
      Point pg{matmul(p.m, g.m), {}}, qg{matmul(q.m, g.m), {}};
      CHECK(std::abs(geodesic_distance(sp, pg, qg) - d) <= 1e-10);
    }
  }
}

TEST_CASE("triangle inequality on random triples") {
  Rng rng(17);
  for (SpaceKind kind : {SpaceKind::SU, SpaceKind::SO}) {
    SpaceSpec sp = make_space(kind, 3);
    for (int t = 0; t < 1000; ++t) {
      Point a = haar_sample(sp, rng), b = haar_sample(sp, rng), c = haar_sample(sp, rng);
      double ab = geodesic_distance(sp, a, b);
      double bc = geodesic_distance(sp, b, c);
      double ac = geodesic_distance(sp, a, c);
      CHECK(ac <= ab + bc + 1e-10);
    }
  }
}

TEST_CASE("graph construction edge cases") {
  SpaceSpec su2 = make_space(SpaceKind::SU, 2);
  Rng rng(19);
  GeometricGraph g1 = build_geometric_graph(su2, 1, 0.5, rng);
  CHECK(g1.edge_count() == 0);
  GeometricGraph gk = build_geometric_graph(su2, 12, su2.diameter_hint + 1.0, rng);
  CHECK(gk.edge_count() == 12 * 11 / 2);
  for (int i = 0; i < gk.N; ++i) CHECK_FALSE(gk.edge(i, i));
  CHECK_THROWS_AS(build_geometric_graph(su2, 0, 0.5, rng), std::invalid_argument);
}

TEST_CASE("Poissonian mean degree matches c(3) ell / vol") {
  SpaceSpec su2 = make_space(SpaceKind::SU, 2);
  double ell = 5.0 * su2.vol / ball_volume(3, 1.0);  // target mean degree 5
  const int N = 2000, trials = 10;
  double total_deg = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(29, t);
    GeometricGraph g = build_geometric_graph(su2, N, std::pow(ell / N, 1.0 / 3.0), rng);
    total_deg += 2.0 * double(g.edge_count()) / N;
  }
  double mean = total_deg / trials;
  double want = ball_volume(3, 1.0) * ell / su2.vol;
  // edge count is Poisson-like: sd of the mean over trials
  double sigma = std::sqrt(2.0 * want / N / trials);
  CHECK(std::abs(mean - want) <= 3.0 * sigma + 0.01 * want);
}

TEST_CASE("edge list export") {
  SpaceSpec su2 = make_space(SpaceKind::SU, 2);
  Rng rng(31);
  GeometricGraph g = build_geometric_graph(su2, 6, 3.0, rng);
  std::string edges = graph_edge_list(g);
  long long lines = std::count(edges.begin(), edges.end(), '\n');
  CHECK(lines == g.edge_count());
  std::string hdr = graph_header_json(su2, g, 31);
  CHECK(hdr.find("\"space\":\"SU\"") != std::string::npos);
  CHECK(hdr.find("\"N\":6") != std::string::npos);
}

TEST_CASE("ball_step stays inside the ball and fills it uniformly") {
  SpaceSpec su2 = make_space(SpaceKind::SU, 2);
  Rng rng(37);
  Point e;
  e.m = CMatrix::identity(2);
  double L = 0.8;
  const int samples = 50000;
  int inner = 0;
  for (int i = 0; i < samples; ++i) {
    Point p = ball_step(su2, e, L, rng);
    double d = geodesic_distance(su2, e, p);
    CHECK(d <= L + 1e-9);
    if (d <= L * 0.5) ++inner;
  }
  // uniform in the geodesic ball: P[d <= L/2] = vol fraction of the half ball
  double want = ball_fraction(su2, 0.5 * L) / ball_fraction(su2, L);
  double got = double(inner) / samples;
  CHECK(std::abs(got - want) <= 3.0 * std::sqrt(want * (1.0 - want) / samples));
}

TEST_CASE("ball_fraction matches Monte Carlo on USp(2)") {
  SpaceSpec usp2 = make_space(SpaceKind::USp, 2);
  Rng rng(41);
  double L = 2.2;
  Point e;
  e.m = CMatrix::identity(4);
  const int samples = 60000;
  int hits = 0;
  for (int i = 0; i < samples; ++i)
    if (geodesic_distance(usp2, haar_sample(usp2, rng), e) <= L) ++hits;
  double p = double(hits) / samples;
  double want = ball_fraction(usp2, L);
  CHECK(std::abs(p - want) <= 3.0 * std::sqrt(std::max(want * (1.0 - want), 1e-9) / samples) + 1e-5);
}
