#include "liegraph/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "liegraph/util.hpp"

namespace liegraph {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
}

double ball_volume(int d, double r) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  if (r < 0.0) throw std::invalid_argument("radius must be >= 0");
  return std::pow(kPi, 0.5 * d) / std::tgamma(1.0 + 0.5 * d) * std::pow(r, d);
}

BooleanModelSample sample_boolean_model(int d, double intensity, double R, Rng& rng) {
  BooleanModelSample s;
  s.d = d;
  s.intensity = intensity;
  s.window_radius = R;
  s.points.push_back(std::vector<double>(d, 0.0));
  long long count = rng.poisson(intensity * ball_volume(d, R));
  for (long long i = 0; i < count; ++i) {
    std::vector<double> p(d);
    double nrm = 0.0;
    for (double& c : p) {
      c = rng.gaussian();
      nrm += c * c;
    }
    nrm = std::sqrt(std::max(nrm, 1e-300));
    double radius = R * std::pow(rng.uniform(), 1.0 / d);
    for (double& c : p) c *= radius / nrm;
    s.points.push_back(std::move(p));
  }
  const int m = (int)s.points.size();
  s.adjacency.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      double dist2 = 0.0;
      for (int c = 0; c < d; ++c) {
        double diff = s.points[i][c] - s.points[j][c];
        dist2 += diff * diff;
      }
      if (dist2 <= 1.0) {
        s.adjacency[i].push_back(j);
        s.adjacency[j].push_back(i);
      }
    }
  return s;
}

std::string RootedNeighborhood::key() const {
  std::string s;
  s.reserve(2 + rows.size() * 8);
  s.push_back((char)k);
  s.push_back((char)radius);
  for (uint64_t r : rows)
    for (int b = 0; b < 8; ++b) s.push_back((char)((r >> (8 * b)) & 0xff));
  return s;
}

namespace {

// Canonical labeling: root first, the rest ordered to minimize the adjacency
// bitstring, with iterated (distance, degree, neighbor-color) refinement
// pruning the search. Position j occupies bit (63-j) so that integer order on
// rows equals bit-by-bit order from position 0, making prefix pruning valid.
inline uint64_t pos_bit(int j) { return 1ull << (63 - j); }

struct CanonSearch {
  int k;
  const std::vector<std::vector<int>>& adj;  // local indices
  std::vector<int> color;                    // refinement class per vertex
  std::vector<uint64_t> best;
  bool have_best = false;
  std::vector<int> pos_of;  // vertex -> assigned position (-1 if none)
  std::vector<int> order;   // position -> vertex

  CanonSearch(int k_, const std::vector<std::vector<int>>& a) : k(k_), adj(a) {}

  std::vector<uint64_t> rows_for(const std::vector<int>& ord) const {
    std::vector<int> posn(k);
    for (int p = 0; p < k; ++p) posn[ord[p]] = p;
    std::vector<uint64_t> rows(k, 0);
    for (int p = 0; p < k; ++p)
      for (int nb : adj[ord[p]]) rows[p] |= pos_bit(posn[nb]);
    return rows;
  }

  void search(int depth) {
    if (depth == k) {
      std::vector<uint64_t> rows = rows_for(order);
      if (!have_best || rows < best) {
        best = rows;
        have_best = true;
      }
      return;
    }
    int min_color = 1 << 30;
    for (int v = 0; v < k; ++v)
      if (pos_of[v] < 0) min_color = std::min(min_color, color[v]);
    for (int v = 0; v < k; ++v) {
      if (pos_of[v] >= 0 || color[v] != min_color) continue;
      uint64_t row = 0;
      for (int nb : adj[v])
        if (pos_of[nb] >= 0) row |= pos_bit(pos_of[nb]);
      if (have_best) {
        // bits at positions < depth are final; larger prefix cannot win
        uint64_t mask = depth == 0 ? 0ull : ~((~0ull) >> depth);
        if ((row & mask) > (best[depth] & mask)) continue;
      }
      pos_of[v] = depth;
      order[depth] = v;
      search(depth + 1);
      pos_of[v] = -1;
    }
  }
};

}  // namespace

RootedNeighborhood rooted_neighborhood(const std::vector<std::vector<int>>& adjacency, int root, int n) {
  if (n < 0) throw std::invalid_argument("radius must be >= 0");
  const int total = (int)adjacency.size();
  std::vector<int> dist(total, -1);
  std::vector<int> keep;
  std::queue<int> q;
  dist[root] = 0;
  q.push(root);
  keep.push_back(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (dist[v] == n) continue;
    for (int nb : adjacency[v])
      if (dist[nb] < 0) {
        dist[nb] = dist[v] + 1;
        keep.push_back(nb);
        q.push(nb);
      }
  }
  const int k = (int)keep.size();
  if (k > 64) throw std::invalid_argument("rooted neighborhood exceeds 64 vertices");
  std::vector<int> local(total, -1);
  for (int i = 0; i < k; ++i) local[keep[i]] = i;
  std::vector<std::vector<int>> sub(k);
  for (int i = 0; i < k; ++i)
    for (int nb : adjacency[keep[i]])
      if (local[nb] >= 0) sub[i].push_back(local[nb]);

  // refinement colors: (distance, degree) iterated with neighbor multisets;
  // the root keeps a dedicated color so it stays at position 0
  std::vector<int> color(k);
  std::vector<long long> sig(k);
  for (int i = 0; i < k; ++i) sig[i] = (long long)dist[keep[i]] * 1000 + (long long)sub[i].size();
  sig[0] = -1;  // root uses keep[0] = root
  for (int round = 0; round < k; ++round) {
    std::vector<long long> sorted_sig = sig;
    std::sort(sorted_sig.begin(), sorted_sig.end());
    sorted_sig.erase(std::unique(sorted_sig.begin(), sorted_sig.end()), sorted_sig.end());
    for (int i = 0; i < k; ++i)
      color[i] = (int)(std::lower_bound(sorted_sig.begin(), sorted_sig.end(), sig[i]) -
                       sorted_sig.begin());
    // refine: new signature = (color, sorted neighbor colors)
    std::vector<long long> next(k);
    for (int i = 0; i < k; ++i) {
      std::vector<int> nc;
      for (int nb : sub[i]) nc.push_back(color[nb]);
      std::sort(nc.begin(), nc.end());
      long long h = color[i];
      for (int c : nc) h = h * 1000003 + c + 1;
      next[i] = h;
    }
    if (next == sig) break;
    sig = next;
  }
  // final colors from the last signature, root pinned first
  {
    std::vector<long long> sorted_sig = sig;
    std::sort(sorted_sig.begin(), sorted_sig.end());
    sorted_sig.erase(std::unique(sorted_sig.begin(), sorted_sig.end()), sorted_sig.end());
    for (int i = 0; i < k; ++i)
      color[i] = 1 + (int)(std::lower_bound(sorted_sig.begin(), sorted_sig.end(), sig[i]) -
                           sorted_sig.begin());
    color[0] = 0;
  }

  CanonSearch cs(k, sub);
  cs.color = color;
  cs.pos_of.assign(k, -1);
  cs.order.assign(k, -1);
  cs.search(0);

  RootedNeighborhood out;
  out.k = k;
  out.radius = n;
  out.rows = cs.best;
  return out;
}

double tv_distance(const std::map<std::string, double>& p, const std::map<std::string, double>& q) {
  double s = 0.0;
  for (const auto& [k, v] : p) {
    auto it = q.find(k);
    s += std::abs(v - (it == q.end() ? 0.0 : it->second));
  }
  for (const auto& [k, v] : q)
    if (p.find(k) == p.end()) s += v;
  return 0.5 * s;
}

BsComparison bs_compare(const SpaceSpec& space, int N, double ell, int n, int trials, Rng& rng,
                        int roots_per_graph) {
  if (space.vol <= 0.0) throw std::invalid_argument("space has no volume attached");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  double L = std::pow(ell / double(N), 1.0 / space.dim);
  double intensity = ell / space.vol;
  double window = n + 2.0;

  std::map<std::string, long long> gh, bh;
  std::map<int, long long> gd, bd;
  std::map<std::string, std::string> edge_lists;

  auto note_edges = [&](const RootedNeighborhood& r) {
    if (edge_lists.count(r.key())) return;
    std::ostringstream os;
    for (int i = 0; i < r.k; ++i)
      for (int j = i + 1; j < r.k; ++j)
        if (r.edge(i, j)) os << i << " " << j << ";";
    edge_lists[r.key()] = os.str();
  };

  int done = 0;
  while (done < trials) {
    GeometricGraph g = build_geometric_graph(space, N, L, rng);
    std::vector<std::vector<int>> adj(N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (g.edge(i, j)) adj[i].push_back(j);
    int here = std::min(roots_per_graph, trials - done);
    for (int t = 0; t < here; ++t) {
      int root = (int)rng.uniform_int(N);
      RootedNeighborhood r = rooted_neighborhood(adj, root, n);
      ++gh[r.key()];
      ++gd[(int)adj[root].size()];
      note_edges(r);
    }
    done += here;
  }
  for (int t = 0; t < trials; ++t) {
    BooleanModelSample s = sample_boolean_model(space.dim, intensity, window, rng);
    RootedNeighborhood r = rooted_neighborhood(s.adjacency, 0, n);
    ++bh[r.key()];
    ++bd[(int)s.adjacency[0].size()];
    note_edges(r);
  }

  BsComparison out;
  for (const auto& [k, v] : gh) out.graph_histogram[k] = double(v) / trials;
  for (const auto& [k, v] : bh) out.boolean_histogram[k] = double(v) / trials;
  for (const auto& [k, v] : gd) out.graph_degrees[k] = double(v) / trials;
  for (const auto& [k, v] : bd) out.boolean_degrees[k] = double(v) / trials;
  out.tv_distance = tv_distance(out.graph_histogram, out.boolean_histogram);
  out.key_edge_lists = std::move(edge_lists);
  return out;
}

double embedding_count_estimate(const CircuitGraph& circuit, int d, double intensity, int trials,
                                Rng& rng) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const int k = circuit.k;
  std::vector<std::vector<int>> hadj(k);
  for (auto [a, b] : circuit.edges) {
    hadj[a].push_back(b);
    hadj[b].push_back(a);
  }
  // order vertices BFS from the root so each new vertex has a mapped neighbor
  std::vector<int> order, dist(k, -1);
  std::queue<int> q;
  dist[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    order.push_back(v);
    for (int nb : hadj[v])
      if (dist[nb] < 0) {
        dist[nb] = dist[v] + 1;
        q.push(nb);
      }
  }
  if ((int)order.size() != k) throw std::invalid_argument("circuit must be connected");
  double window = *std::max_element(dist.begin(), dist.end()) + 1.0;

  double total = 0.0;
  std::vector<int> assign(k, -1);
  for (int t = 0; t < trials; ++t) {
    BooleanModelSample s = sample_boolean_model(d, intensity, window, rng);
    const int m = (int)s.points.size();
    std::vector<char> used(m, 0);
    long long count = 0;
    // DFS over H-vertices in BFS order; root anchored at point 0. Candidates
    // come from the adjacency list of the first mapped neighbor.
    std::function<void(int)> dfs = [&](int idx) {
      if (idx == k) {
        ++count;
        return;
      }
      int hv = order[idx];
      int anchor = -1;
      for (int nb : hadj[hv])
        if (assign[nb] >= 0) {
          anchor = assign[nb];
          break;
        }
      for (int cand : s.adjacency[anchor]) {
        if (used[cand]) continue;
        bool ok = true;
        for (int nb : hadj[hv]) {
          if (assign[nb] < 0) continue;
          int pt = assign[nb];
          if (pt == anchor) continue;
          bool adjacent = false;
          for (int x : s.adjacency[pt])
            if (x == cand) {
              adjacent = true;
              break;
            }
          if (!adjacent) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        used[cand] = 1;
        assign[hv] = cand;
        dfs(idx + 1);
        used[cand] = 0;
        assign[hv] = -1;
      }
    };
    used[0] = 1;
    assign[order[0]] = 0;
    dfs(1);
    used[0] = 0;
    assign[order[0]] = -1;
    total += double(count);
  }
  return total / trials;
}

std::string histogram_json(const BsComparison& c) {
  std::ostringstream os;
  os << "{\"tv_distance\":" << format_double(c.tv_distance) << ",\"graph\":{";
  bool first = true;
  for (const auto& [k, v] : c.graph_histogram) {
    if (!first) os << ",";
    first = false;
    os << "\"" << git_blob_sha1(k) << "\":" << format_double(v);
  }
  os << "},\"boolean\":{";
  first = true;
  for (const auto& [k, v] : c.boolean_histogram) {
    if (!first) os << ",";
    first = false;
    os << "\"" << git_blob_sha1(k) << "\":" << format_double(v);
  }
  os << "},\"edge_lists\":{";
  first = true;
  for (const auto& [k, v] : c.key_edge_lists) {
    if (!first) os << ",";
    first = false;
    os << "\"" << git_blob_sha1(k) << "\":\"" << v << "\"";
  }
  os << "}}";
  return os.str();
}

}  // namespace liegraph
