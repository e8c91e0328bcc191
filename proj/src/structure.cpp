#include "sgt/structure.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace sgt {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

std::vector<int> bfs_distances(const std::vector<std::vector<std::pair<int, int>>>& adj,
                               int source) {
  std::vector<int> dist(adj.size(), kInf);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (auto [w, s] : adj[u]) {
      (void)s;
      if (dist[w] == kInf) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Rotates/reflects a cycle's vertex sequence into normalized form and
// attaches the sign product.
CycleWitness normalize_cycle(const SignedGraph& g, std::vector<int> cyc) {
  auto it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), it, cyc.end());
  if (cyc.size() >= 3 && cyc[1] > cyc.back()) std::reverse(cyc.begin() + 1, cyc.end());
  int sign = 1;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    int s = g.sign(cyc[i], cyc[(i + 1) % cyc.size()]);
    if (s == 0) throw std::logic_error("normalize_cycle: sequence is not a cycle");
    sign *= s;
  }
  return CycleWitness{std::move(cyc), sign};
}

}  // namespace

VertexSet LayerPartition::at_distance(int d) const {
  if (d < 1) throw std::invalid_argument("layer distance must be >= 1");
  if (d > static_cast<int>(layers.size())) return VertexSet{};
  return layers[d - 1];
}

bool is_connected(const SignedGraph& g) {
  if (g.order() == 0) throw std::invalid_argument("connectivity is undefined for the empty graph");
  auto dist = bfs_distances(g.adjacency(), 0);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d < kInf; });
}

std::optional<int> girth(const SignedGraph& g) {
  const int n = g.order();
  if (g.size() < 3) return std::nullopt;
  auto adj = g.adjacency();
  int best = kInf;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n && best > 3; ++root) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) continue;
      for (auto [w, s] : adj[u]) {
        (void)s;
        if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kInf) return std::nullopt;
  return best;
}

std::optional<CycleWitness> shortest_cycle(const SignedGraph& g) {
  auto len = girth(g);
  if (!len) return std::nullopt;
  const int target = *len;
  const int n = g.order();
  auto adj = g.adjacency();

  std::vector<std::vector<int>> dist(n);
  for (int v = 0; v < n; ++v) dist[v] = bfs_distances(adj, v);

  std::vector<int> path;
  std::vector<char> used(n, 0);

  // Depth-first search in ascending vertex order; the first closed sequence
  // in normalized orientation is the lexicographically least one.
  auto extend = [&](auto&& self) -> bool {
    int u = path.back();
    if (static_cast<int>(path.size()) == target)
      return g.has_edge(u, path[0]) && path[1] < path.back();
    for (auto [w, s] : adj[u]) {
      (void)s;
      if (w <= path[0] || used[w]) continue;
      if (dist[w][path[0]] > target - static_cast<int>(path.size())) continue;
      used[w] = 1;
      path.push_back(w);
      if (self(self)) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };

  for (int c0 = 0; c0 < n; ++c0) {
    path.assign(1, c0);
    std::fill(used.begin(), used.end(), 0);
    used[c0] = 1;
    if (extend(extend)) return normalize_cycle(g, path);
  }
  throw std::logic_error("shortest_cycle: girth reported but no cycle found");
}

BalanceResult check_balance(const SignedGraph& g) {
  const int n = g.order();
  auto adj = g.adjacency();
  std::vector<int> theta(n, 0), parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (theta[root] != 0) continue;
    theta[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (auto [w, s] : adj[u]) {
        if (theta[w] == 0) {
          theta[w] = theta[u] * s;
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
  }
  for (const Edge& e : g.edges()) {
    if (theta[e.u] * theta[e.v] == e.sign) continue;
    // Conflicting non-tree edge: close it through the BFS tree paths.
    std::vector<int> pu, pv;
    for (int x = e.u; x != -1; x = parent[x]) pu.push_back(x);
    for (int x = e.v; x != -1; x = parent[x]) pv.push_back(x);
    std::size_t i = pu.size() - 1, j = pv.size() - 1;
    while (i > 0 && j > 0 && pu[i - 1] == pv[j - 1]) --i, --j;
    std::vector<int> cyc(pu.begin(), pu.begin() + i + 1);
    for (std::size_t k = j; k-- > 0;) cyc.push_back(pv[k]);
    return BalanceResult{false, normalize_cycle(g, std::move(cyc))};
  }
  return BalanceResult{true, std::nullopt};
}

bool is_balanced(const SignedGraph& g) { return check_balance(g).balanced; }

VertexSet pendant_vertices(const SignedGraph& g) {
  auto deg = g.degrees();
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (deg[v] == 1) out.push_back(v);
  return VertexSet(std::move(out));
}

LayerPartition neighborhood_layers(const SignedGraph& g, const VertexSet& h) {
  if (h.empty()) throw std::invalid_argument("neighborhood layers: source set is empty");
  const int n = g.order();
  for (int v : h.members())
    if (v >= n) throw std::invalid_argument("neighborhood layers: vertex out of range");
  auto adj = g.adjacency();
  std::vector<int> dist(n, kInf);
  std::deque<int> queue;
  for (int v : h.members()) {
    dist[v] = 0;
    queue.push_back(v);
  }
  int max_dist = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (auto [w, s] : adj[u]) {
      (void)s;
      if (dist[w] == kInf) {
        dist[w] = dist[u] + 1;
        max_dist = std::max(max_dist, dist[w]);
        queue.push_back(w);
      }
    }
  }
  std::vector<std::vector<int>> buckets(max_dist);
  for (int v = 0; v < n; ++v)
    if (dist[v] >= 1 && dist[v] < kInf) buckets[dist[v] - 1].push_back(v);
  LayerPartition out;
  for (auto& b : buckets) out.layers.emplace_back(std::move(b));
  return out;
}

std::vector<ExternalPath> external_paths(const SignedGraph& g, const CycleWitness& cycle) {
  if (!is_valid_cycle_witness(g, cycle))
    throw std::invalid_argument("external paths: witness is not a cycle of the graph");
  const int n = g.order();
  auto adj = g.adjacency();
  std::vector<char> on_cycle(n, 0);
  for (int v : cycle.vertices) on_cycle[v] = 1;
  std::map<std::pair<int, int>, int> best;

  auto offer = [&](int a, int b, int length) {
    if (a == b) return;
    auto key = std::minmax(a, b);
    auto [it, inserted] = best.emplace(key, length);
    if (!inserted) it->second = std::min(it->second, length);
  };

  std::vector<int> dist(n);
  for (int y : cycle.vertices) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[y] = 0;
    std::deque<int> queue{y};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (auto [w, s] : adj[u]) {
        (void)s;
        if (on_cycle[w]) {
          bool cycle_edge = false;
          if (u == y) {
            const int k = cycle.length();
            for (int i = 0; i < k && !cycle_edge; ++i) {
              int a = cycle.vertices[i], b = cycle.vertices[(i + 1) % k];
              cycle_edge = (std::minmax(a, b) == std::minmax(u, w));
            }
          }
          if (!cycle_edge) offer(y, w, dist[u] + 1);
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<ExternalPath> out;
  for (const auto& [key, length] : best)
    out.push_back(ExternalPath{key.first, key.second, length});
  std::sort(out.begin(), out.end());
  return out;
}

bool is_valid_cycle_witness(const SignedGraph& g, const CycleWitness& w) {
  const int k = w.length();
  if (k < 3) return false;
  std::vector<int> sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.front() < 0 || sorted.back() >= g.order()) return false;
  if (w.vertices[0] != sorted.front()) return false;
  if (w.vertices[1] > w.vertices[k - 1]) return false;
  int sign = 1;
  for (int i = 0; i < k; ++i) {
    int s = g.sign(w.vertices[i], w.vertices[(i + 1) % k]);
    if (s == 0) return false;
    sign *= s;
  }
  return sign == w.sign;
}

}  // namespace sgt
