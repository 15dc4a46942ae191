#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "liegraph/poisson.hpp"
#include "liegraph/rng.hpp"

using namespace liegraph;

namespace {
const double kPi = 3.141592653589793238462643383279503;
}

TEST_CASE("Euclidean ball volumes") {
  CHECK(ball_volume(3, 1.0) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-14));
  CHECK(ball_volume(2, 1.0) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(ball_volume(8, 1.0) == doctest::Approx(std::pow(kPi, 4) / 24.0).epsilon(1e-14));
  CHECK(ball_volume(3, 2.0) == doctest::Approx(8.0 * 4.0 * kPi / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(ball_volume(0, 1.0), std::invalid_argument);
}

TEST_CASE("boolean model point counts and root degree") {
  Rng rng(3);
  SUBCASE("zero intensity leaves an isolated root") {
    BooleanModelSample s = sample_boolean_model(3, 0.0, 4.0, rng);
    CHECK(s.points.size() == 1);
    CHECK(s.adjacency[0].empty());
  }
  SUBCASE("mean point count is intensity times window volume") {
    const int trials = 10000;
    double intensity = 0.7, R = 3.0;
    double want = intensity * ball_volume(3, R);
    double total = 0.0;
    for (int t = 0; t < trials; ++t)
      total += double(sample_boolean_model(3, intensity, R, rng).points.size() - 1);
    double mean = total / trials;
    CHECK(std::abs(mean - want) <= 3.0 * std::sqrt(want / trials));
  }
  SUBCASE("mean root degree is intensity times the unit ball volume") {
    const int trials = 10000;
    double intensity = 1.3;
    double want = intensity * ball_volume(3, 1.0);
    double total = 0.0;
    for (int t = 0; t < trials; ++t)
      total += double(sample_boolean_model(3, intensity, 2.5, rng).adjacency[0].size());
    double mean = total / trials;
    CHECK(std::abs(mean - want) <= 3.0 * std::sqrt(want / trials));
  }
}

TEST_CASE("rooted neighborhoods") {
  SUBCASE("radius zero is a single rooted vertex") {
    std::vector<std::vector<int>> adj = {{1}, {0, 2}, {1}};
    RootedNeighborhood r = rooted_neighborhood(adj, 1, 0);
    CHECK(r.k == 1);
  }
  SUBCASE("Z^2 lattice truncated at radius 3 is the 25-vertex diamond") {
    const int side = 9, off = 4;
    auto idx = [&](int x, int y) { return (x + off) * side + (y + off); };
    std::vector<std::vector<int>> adj(side * side);
    for (int x = -off; x <= off; ++x)
      for (int y = -off; y <= off; ++y) {
        if (x + 1 <= off) {
          adj[idx(x, y)].push_back(idx(x + 1, y));
          adj[idx(x + 1, y)].push_back(idx(x, y));
        }
        if (y + 1 <= off) {
          adj[idx(x, y)].push_back(idx(x, y + 1));
          adj[idx(x, y + 1)].push_back(idx(x, y));
        }
      }
    RootedNeighborhood r = rooted_neighborhood(adj, idx(0, 0), 3);
    CHECK(r.k == 25);
    long long edges = 0;
    for (int i = 0; i < r.k; ++i)
      for (int j = i + 1; j < r.k; ++j) edges += r.edge(i, j) ? 1 : 0;
    CHECK(edges == 36);  // induced edges of the |x|+|y| <= 3 diamond
  }
  SUBCASE("canonical form is invariant under relabeling") {
    Rng rng(7);
    // a fixed small rooted graph, root 0
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {1, 4}, {4, 5}};
    const int k = 6;
    for (int t = 0; t < 200; ++t) {
      std::vector<int> perm(k);
      for (int i = 0; i < k; ++i) perm[i] = i;
      for (int i = k - 1; i > 1; --i) std::swap(perm[i], perm[1 + rng.uniform_int(i)]);
      std::vector<std::vector<int>> adj(k);
      for (auto [a, b] : edges) {
        adj[perm[a]].push_back(perm[b]);
        adj[perm[b]].push_back(perm[a]);
      }
      RootedNeighborhood r0 = rooted_neighborhood(adj, perm[0], 4);
      std::vector<std::vector<int>> base(k);
      for (auto [a, b] : edges) {
        base[a].push_back(b);
        base[b].push_back(a);
      }
      CHECK(r0 == rooted_neighborhood(base, 0, 4));
    }
  }
}

TEST_CASE("tv distance basics") {
  std::map<std::string, double> p = {{"a", 0.5}, {"b", 0.5}};
  std::map<std::string, double> q = {{"a", 0.5}, {"c", 0.5}};
  CHECK(tv_distance(p, p) == 0.0);
  CHECK(tv_distance(p, q) == doctest::Approx(0.5));
}

TEST_CASE("embedding counts") {
  Rng rng(11);
  SUBCASE("single-vertex circuit maps only the root") {
    CircuitGraph g;
    g.k = 1;
    CHECK(embedding_count_estimate(g, 3, 1.0, 100, rng) == doctest::Approx(1.0));
  }
  SUBCASE("2-cycle estimates the mean root degree") {
    CircuitGraph g;
    g.k = 2;
    g.edges = {{0, 1}};
    double want = 1.2 * ball_volume(3, 1.0);
    double got = embedding_count_estimate(g, 3, 1.2, 20000, rng);
    CHECK(std::abs(got - want) <= 3.0 * std::sqrt(want / 20000.0) + 0.01);
  }
  SUBCASE("k-cycle scales as intensity^(k-1)") {
    for (int k : {3, 4}) {
      CircuitGraph g;
      g.k = k;
      for (int i = 0; i < k; ++i) g.edges.push_back({i, (i + 1) % k});
      g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
      std::vector<double> logs;
      const double intensities[3] = {0.5, 1.0, 2.0};
      for (double th : intensities)
        logs.push_back(std::log(embedding_count_estimate(g, 3, th, 60000, rng)));
      double slope1 = (logs[1] - logs[0]) / std::log(2.0);
      double slope2 = (logs[2] - logs[1]) / std::log(2.0);
      CHECK(std::abs(slope1 - (k - 1)) < 0.1);
      CHECK(std::abs(slope2 - (k - 1)) < 0.1);
    }
  }
}

TEST_CASE("bs_compare radius zero is identically zero") {
  SpaceSpec su2 = make_space(SpaceKind::SU, 2);
  Rng rng(31);
  BsComparison cmp = bs_compare(su2, 200, 40.0, 0, 50, rng, 25);
  CHECK(cmp.tv_distance == 0.0);
  CHECK(cmp.graph_histogram.size() == 1);
}

TEST_CASE("pi_1 comparison tightens with N on average") {
  SpaceSpec su2 = make_space(SpaceKind::SU, 2);
  double ell = su2.vol / ball_volume(3, 1.0);
  double tv_small = 0.0, tv_large = 0.0;
  const int reps = 10;
  for (int r = 0; r < reps; ++r) {
    Rng rng(4000 + r, r);
    tv_small += bs_compare(su2, 500, ell, 1, 400, rng, 100).tv_distance / reps;
    Rng rng2(5000 + r, r);
    tv_large += bs_compare(su2, 4000, ell, 1, 400, rng2, 100).tv_distance / reps;
  }
  CHECK(tv_small >= tv_large);
}

TEST_CASE("two roots of one graph have nearly independent pi_1") {
  SpaceSpec su2 = make_space(SpaceKind::SU, 2);
  const int N = 4000;
  double ell = su2.vol / ball_volume(3, 1.0);
  double L = std::pow(ell / N, 1.0 / 3.0);
  std::map<std::pair<std::string, std::string>, double> joint;
  std::map<std::string, double> marg;
  const int pairs = 5000;  // the TV noise floor scales like 1/sqrt(pairs)
  int done = 0;
  while (done < pairs) {
    Rng rng(6000 + done, done);
    GeometricGraph g = build_geometric_graph(su2, N, L, rng);
    std::vector<std::vector<int>> adj(N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (g.edge(i, j)) adj[i].push_back(j);
    int here = std::min(100, pairs - done);
    for (int t = 0; t < here; ++t) {
      int r1 = (int)rng.uniform_int(N), r2 = (int)rng.uniform_int(N);
      while (r2 == r1) r2 = (int)rng.uniform_int(N);
      std::string k1 = rooted_neighborhood(adj, r1, 1).key();
      std::string k2 = rooted_neighborhood(adj, r2, 1).key();
      joint[{k1, k2}] += 1.0 / pairs;
      marg[k1] += 0.5 / pairs;
      marg[k2] += 0.5 / pairs;
    }
    done += here;
  }
  double tv = 0.0;
  std::set<std::pair<std::string, std::string>> keys;
  for (const auto& [k, v] : joint) keys.insert(k);
  for (const auto& [k1, v1] : marg)
    for (const auto& [k2, v2] : marg) keys.insert({k1, k2});
  for (const auto& k : keys) {
    double pj = joint.count(k) ? joint.at(k) : 0.0;
    double pm = (marg.count(k.first) ? marg.at(k.first) : 0.0) *
                (marg.count(k.second) ? marg.at(k.second) : 0.0);
    tv += std::abs(pj - pm);
  }
  CHECK(0.5 * tv <= 0.05);
}

TEST_CASE("boolean model statistics are translation invariant") {
  // re-rooting at a process atom after shifting the window leaves the degree
  // law unchanged: compare root-degree histograms of the centered model with
  // degrees of the atom nearest to a shifted center
  Rng rng(13);
  const int trials = 20000;
  double intensity = 0.5;
  double shift = 1.0;
  std::map<std::string, double> h0, h1;
  long long n0 = 0, n1 = 0;
  for (int t = 0; t < trials; ++t) {
    BooleanModelSample s = sample_boolean_model(3, intensity, 4.0, rng);
    ++h0[std::to_string(s.adjacency[0].size())];
    ++n0;
    // nearest atom to the shifted center (skip the artificial root 0)
    int best = -1;
    double bd = 1e300;
    for (size_t i = 1; i < s.points.size(); ++i) {
      double d2 = 0.0;
      for (int c = 0; c < 3; ++c) {
        double diff = s.points[i][c] - (c == 0 ? shift : 0.0);
        d2 += diff * diff;
      }
      if (d2 < bd) {
        bd = d2;
        best = (int)i;
      }
    }
    if (best < 0) continue;
    // degree among other atoms only, ignoring the artificial root and
    // staying away from the window boundary
    if (bd > 0.25) continue;
    int deg = 0;
    for (int nb : s.adjacency[best])
      if (nb != 0) ++deg;
    ++h1[std::to_string(deg)];
    ++n1;
  }
  for (auto& [k, v] : h0) v /= n0;
  for (auto& [k, v] : h1) v /= n1;
  // the re-rooted degree law is Poisson(intensity c(3)) plus a palm bias from
  // conditioning on the nearest atom; 3 sigma on the dominant cells
  double d = tv_distance(h0, h1);
  CHECK(d < 0.05);
}
