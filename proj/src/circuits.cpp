#include "liegraph/circuits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "liegraph/util.hpp"

namespace liegraph {

std::string ReducedComponent::key() const {
  std::ostringstream os;
  if (is_loop) {
    os << "L" << loop_label;
  } else {
    os << "G" << vertices << ":";
    for (const auto& [vw, l] : edges) os << vw.first << "-" << vw.second << "x" << l << ";";
  }
  return os.str();
}

long long ReducedComponent::label_sum_minus_edges() const {
  if (is_loop) return loop_label - 1;
  long long s = 0;
  for (const auto& [vw, l] : edges) s += l - 1;
  return s;
}

std::string ReducedCircuit::key() const {
  std::string s;
  for (const ReducedComponent& c : components) {
    s += c.key();
    s += "|";
  }
  return s;
}

std::vector<Circuit> enumerate_circuits(int s) {
  if (s < 2) throw std::invalid_argument("circuit length must be >= 2");
  if (s > 12) throw std::invalid_argument("circuit enumeration guarded at s <= 12");
  std::vector<Circuit> out;
  std::vector<int> b(s, 0);
  std::function<void(int, int)> rec = [&](int pos, int maxb) {
    if (pos == s) {
      if (b[s - 1] == b[0]) return;
      Circuit c;
      c.s = s;
      c.k = maxb + 1;
      c.traversal = b;
      out.push_back(std::move(c));
      return;
    }
    for (int v = 0; v <= maxb + 1; ++v) {
      if (v == b[pos - 1]) continue;
      b[pos] = v;
      rec(pos + 1, std::max(maxb, v));
    }
  };
  rec(1, 0);
  return out;
}

Circuit circuit_from_identities(int s, const std::vector<std::vector<int>>& identity_groups) {
  std::vector<int> rep(s);
  std::iota(rep.begin(), rep.end(), 0);
  for (const auto& g : identity_groups) {
    if (g.empty()) continue;
    int lead = g[0] - 1;
    for (int pos : g) rep[pos - 1] = rep[lead];
  }
  // renumber in first-occurrence order to a restricted growth string
  std::map<int, int> id;
  Circuit c;
  c.s = s;
  c.traversal.resize(s);
  for (int i = 0; i < s; ++i) {
    if (!id.count(rep[i])) {
      int next = (int)id.size();
      id[rep[i]] = next;
    }
    c.traversal[i] = id[rep[i]];
  }
  c.k = (int)id.size();
  for (int i = 0; i < s; ++i)
    if (c.traversal[i] == c.traversal[(i + 1) % s])
      throw std::invalid_argument("identities would merge consecutive traversal positions");
  return c;
}

namespace {

using Edge = std::pair<std::pair<int, int>, long long>;

// biconnected components of a labeled multigraph; parallel edges keep their
// own identity (a doubled pair is already 2-connected)
std::vector<std::vector<Edge>> biconnected_components(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (to, edge id)
  for (size_t id = 0; id < edges.size(); ++id) {
    adj[edges[id].first.first].push_back({edges[id].first.second, (int)id});
    adj[edges[id].first.second].push_back({edges[id].first.first, (int)id});
  }
  std::vector<int> num(n, -1), low(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<Edge>> comps;
  int counter = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    num[v] = low[v] = counter++;
    for (const auto& [w, id] : adj[v]) {
      if (id == parent_edge) continue;
      if (num[w] < 0) {
        stack.push_back(id);
        dfs(w, id);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= num[v]) {
          std::vector<Edge> comp;
          for (;;) {
            int top = stack.back();
            stack.pop_back();
            comp.push_back(edges[top]);
            if (top == id) break;
          }
          comps.push_back(std::move(comp));
        }
      } else if (num[w] < num[v]) {
        stack.push_back(id);
        low[v] = std::min(low[v], num[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (num[v] < 0 && !adj[v].empty()) dfs(v, -1);
  return comps;
}

// canonical form of a connected labeled loopless multigraph on <= 8 vertices:
// exhaustive minimization of the sorted edge list over vertex orderings
ReducedComponent canonical_component(int nverts, std::vector<Edge> edges) {
  if (nverts > 8) throw std::invalid_argument("reduced component too large to canonicalize");
  std::vector<int> perm(nverts);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  bool have = false;
  do {
    std::vector<Edge> mapped;
    mapped.reserve(edges.size());
    for (const Edge& e : edges) {
      int a = perm[e.first.first], b = perm[e.first.second];
      if (a > b) std::swap(a, b);
      mapped.push_back({{a, b}, e.second});
    }
    std::sort(mapped.begin(), mapped.end());
    if (!have || mapped < best) {
      best = mapped;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  ReducedComponent c;
  c.is_loop = false;
  c.vertices = nverts;
  c.edges = best;
  return c;
}

}  // namespace

ReducedCircuit reduce_multigraph(int vertices, const std::vector<Edge>& in_edges) {
  std::vector<ReducedComponent> final_components;

  for (auto& comp_edges : biconnected_components(vertices, in_edges)) {
    // relabel vertices locally
    std::map<int, int> local;
    for (const Edge& e : comp_edges) {
      if (!local.count(e.first.first)) local[e.first.first] = (int)local.size();
      if (!local.count(e.first.second)) local[e.first.second] = (int)local.size();
    }
    int n = (int)local.size();
    std::vector<Edge> edges;
    for (const Edge& e : comp_edges) {
      int a = local[e.first.first], b = local[e.first.second];
      if (a > b) std::swap(a, b);
      edges.push_back({{a, b}, e.second});
    }

    // recursively suppress vertices of degree 2 (loops stop the process)
    long long loop_here = -1;
    for (;;) {
      std::vector<int> degree(n, 0);
      std::vector<char> has_loop(n, 0);
      for (const Edge& e : edges) {
        if (e.first.first == e.first.second) {
          has_loop[e.first.first] = 1;
        } else {
          ++degree[e.first.first];
          ++degree[e.first.second];
        }
      }
      int pick = -1;
      for (int v = 0; v < n; ++v)
        if (!has_loop[v] && degree[v] == 2) {
          pick = v;
          break;
        }
      if (pick < 0) break;
      std::vector<Edge> incident, rest;
      for (const Edge& e : edges)
        (e.first.first == pick || e.first.second == pick ? incident : rest).push_back(e);
      int a = incident[0].first.first == pick ? incident[0].first.second : incident[0].first.first;
      int b = incident[1].first.first == pick ? incident[1].first.second : incident[1].first.first;
      long long l = incident[0].second + incident[1].second;
      int lo = std::min(a, b), hi = std::max(a, b);
      rest.push_back({{lo, hi}, l});
      edges = std::move(rest);
      if (a == b && edges.size() == 1) {
        loop_here = l;  // the component collapsed to a single loop
        break;
      }
    }

    if (loop_here >= 0) {
      ReducedComponent c;
      c.is_loop = true;
      c.loop_label = loop_here;
      final_components.push_back(c);
      continue;
    }
    if (edges.size() == 1 && edges[0].first.first != edges[0].first.second) {
      // single labeled edge becomes a loop one label higher
      ReducedComponent c;
      c.is_loop = true;
      c.loop_label = edges[0].second + 1;
      final_components.push_back(c);
      continue;
    }
    // compact the vertex set (suppression may have removed some)
    std::map<int, int> used;
    for (const Edge& e : edges) {
      if (!used.count(e.first.first)) used[e.first.first] = (int)used.size();
      if (!used.count(e.first.second)) used[e.first.second] = (int)used.size();
    }
    std::vector<Edge> packed;
    for (const Edge& e : edges) {
      int a = used[e.first.first], b = used[e.first.second];
      if (a > b) std::swap(a, b);
      packed.push_back({{a, b}, e.second});
    }
    final_components.push_back(canonical_component((int)used.size(), packed));
  }

  std::sort(final_components.begin(), final_components.end(),
            [](const ReducedComponent& a, const ReducedComponent& b) { return a.key() < b.key(); });
  ReducedCircuit r;
  r.components = std::move(final_components);
  r.c = (int)r.components.size();
  r.k_prime = 0;
  for (const ReducedComponent& c : r.components) r.k_prime += c.is_loop ? 1 : c.vertices;
  return r;
}

ReducedCircuit reduce_circuit(const Circuit& c) {
  // forget orientation, collapse multi-edges, label 1
  std::map<std::pair<int, int>, long long> label;
  for (int i = 0; i < c.s; ++i) {
    int a = c.traversal[i], b = c.traversal[(i + 1) % c.s];
    if (a > b) std::swap(a, b);
    label[{a, b}] = 1;
  }
  std::vector<Edge> edges;
  for (const auto& [vw, l] : label) edges.push_back({vw, l});
  return reduce_multigraph(c.k, edges);
}

long long k_parameter(const ReducedCircuit& r) {
  long long s = 0;
  for (const ReducedComponent& c : r.components) s += c.label_sum_minus_edges();
  return 1 + r.k_prime - r.c + s;
}

std::vector<ExpansionRow> expansion_table(int s) {
  if (s < 2 || s > 8) throw std::invalid_argument("expansion table guarded at 2 <= s <= 8");
  std::map<std::string, ExpansionRow> rows;
  for (const Circuit& c : enumerate_circuits(s)) {
    ReducedCircuit r = reduce_circuit(c);
    std::string key = r.key();
    auto it = rows.find(key);
    if (it == rows.end()) {
      ExpansionRow row;
      row.reduction = r;
      row.multiplicity = 1;
      row.k = k_parameter(r);
      rows.emplace(key, std::move(row));
    } else {
      ++it->second.multiplicity;
    }
  }
  std::vector<ExpansionRow> out;
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  std::sort(out.begin(), out.end(), [](const ExpansionRow& a, const ExpansionRow& b) {
    if (a.k != b.k) return a.k > b.k;
    return a.reduction.key() < b.reduction.key();
  });
  return out;
}

std::string expansion_table_json(int s) {
  std::ostringstream os;
  os << "{\"s\":" << s << ",\"rows\":[";
  bool first = true;
  for (const ExpansionRow& row : expansion_table(s)) {
    if (!first) os << ",";
    first = false;
    os << "{\"k\":" << row.k << ",\"multiplicity\":" << row.multiplicity << ",\"components\":[";
    bool cf = true;
    for (const ReducedComponent& c : row.reduction.components) {
      if (!cf) os << ",";
      cf = false;
      if (c.is_loop) {
        os << "{\"loop\":" << c.loop_label << "}";
      } else {
        os << "{\"vertices\":" << c.vertices << ",\"edges\":[";
        bool ef = true;
        for (const auto& [vw, l] : c.edges) {
          if (!ef) os << ",";
          ef = false;
          os << "[" << vw.first << "," << vw.second << "," << l << "]";
        }
        os << "]}";
      }
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

namespace {

// chained importance estimate of E_{comp,N} for one component
double component_estimate(const SpaceSpec& space, const ReducedComponent& comp, double L, double p,
                          int trials, Rng& rng) {
  if (comp.is_loop) {
    // p^(l-1) * P[l-1 chained ball steps return within L]
    long long l = comp.loop_label;
    if (l == 1) return p;  // degenerate, not produced by reductions
    if (l == 2) return p;  // a single ball step always returns within L
    Point base = haar_sample(space, rng);
    long long hits = 0;
    for (int t = 0; t < trials; ++t) {
      Point cur = base;
      for (long long step = 0; step + 1 < l; ++step) cur = ball_step(space, cur, L, rng);
      if (geodesic_distance(space, base, cur) <= L) ++hits;
    }
    return std::pow(p, double(l - 1)) * double(hits) / trials;
  }
  // generic component: BFS spanning tree from vertex 0; tree edges are full
  // chains, non-tree edges keep a final indicator
  const int n = comp.vertices;
  std::vector<std::vector<std::pair<int, long long>>> adj(n);
  std::vector<Edge> nontree;
  std::vector<std::pair<std::pair<int, int>, long long>> tree;
  {
    std::vector<char> seen(n, 0);
    std::vector<char> edge_used(comp.edges.size(), 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (size_t ei = 0; ei < comp.edges.size(); ++ei) {
        const Edge& e = comp.edges[ei];
        if (edge_used[ei]) continue;
        int other = -1;
        if (e.first.first == v) other = e.first.second;
        if (e.first.second == v) other = e.first.first;
        if (other < 0 || seen[other]) continue;
        edge_used[ei] = 1;
        tree.push_back({{v, other}, e.second});
        seen[other] = 1;
        q.push(other);
      }
    }
    for (size_t ei = 0; ei < comp.edges.size(); ++ei)
      if (!edge_used[ei]) nontree.push_back(comp.edges[ei]);
    (void)adj;
  }
  long long steps = 0;
  for (const auto& [vw, l] : tree) steps += l;
  for (const Edge& e : nontree) steps += e.second - 1;

  double hits = 0.0;
  std::vector<Point> pos(n);
  for (int t = 0; t < trials; ++t) {
    pos[0] = haar_sample(space, rng);
    for (const auto& [vw, l] : tree) {
      Point cur = pos[vw.first];
      for (long long step = 0; step < l; ++step) cur = ball_step(space, cur, L, rng);
      pos[vw.second] = cur;
    }
    bool all = true;
    for (const Edge& e : nontree) {
      Point cur = pos[e.first.first];
      for (long long step = 0; step + 1 < e.second; ++step) cur = ball_step(space, cur, L, rng);
      if (geodesic_distance(space, cur, pos[e.first.second]) > L) {
        all = false;
        break;
      }
    }
    if (all) hits += 1.0;
  }
  return std::pow(p, double(steps)) * hits / trials;
}

}  // namespace

double estimate_E_R(const SpaceSpec& space, const ReducedCircuit& r, int N, double ell, int trials,
                    Rng& rng) {
  if (space.kind == SpaceKind::SphereR)
    throw std::invalid_argument("estimate_E_R supports group spaces only");
  double L = std::pow(ell / double(N), 1.0 / space.dim);
  double p = ball_fraction(space, L);
  double prod = 1.0;
  for (const ReducedComponent& comp : r.components)
    prod *= component_estimate(space, comp, L, p, trials, rng);
  return prod;
}

CircuitGraph circuit_graph(const Circuit& c) {
  CircuitGraph g;
  g.k = c.k;
  std::map<std::pair<int, int>, char> seen;
  for (int i = 0; i < c.s; ++i) {
    int a = c.traversal[i], b = c.traversal[(i + 1) % c.s];
    if (a > b) std::swap(a, b);
    if (!seen.count({a, b})) {
      seen[{a, b}] = 1;
      g.edges.push_back({a, b});
    }
  }
  // BFS distance from the traversal start (vertex 0)
  std::vector<int> dist(c.k, -1);
  std::queue<int> q;
  dist[0] = 0;
  q.push(0);
  std::vector<std::vector<int>> adj(c.k);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int nb : adj[v])
      if (dist[nb] < 0) {
        dist[nb] = dist[v] + 1;
        q.push(nb);
      }
  }
  g.radius_from_root = *std::max_element(dist.begin(), dist.end());
  return g;
}

}  // namespace liegraph
