#include "sgt/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "sgt/structure.hpp"

namespace sgt {

namespace {

int triangle_bits(int n) { return n * (n - 1) / 2; }

int bit_shift(int n, int i, int j) {
  // Row-major upper-triangle index of (i, j), i < j; bit (0,1) is most
  // significant so lexicographically smaller adjacency rows give smaller codes.
  int idx = i * n - i * (i + 1) / 2 + (j - i - 1);
  return triangle_bits(n) - 1 - idx;
}

// Iteratively refined vertex coloring (degree, then multiset of neighbor
// colors). The stable colors are isomorphism-invariant, so restricting
// canonical relabelings to color-respecting ones is sound.
std::vector<int> stable_coloring(const SignedGraph& g) {
  const int n = g.order();
  std::vector<int> color = g.degrees();
  auto adj = g.adjacency();
  int classes = 0;
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> buckets;
    for (int v = 0; v < n; ++v) {
      std::vector<int> around;
      for (auto [w, s] : adj[v]) {
        (void)s;
        around.push_back(color[w]);
      }
      std::sort(around.begin(), around.end());
      buckets[{color[v], std::move(around)}].push_back(v);
    }
    int id = 0;
    for (const auto& [sig, members] : buckets) {
      for (int v : members) color[v] = id;
      ++id;
    }
    if (id == classes) return color;
    classes = id;
  }
}

}  // namespace

CanonicalCode canonical_code(const SignedGraph& g) {
  const int n = g.order();
  if (n < 1 || n > 8) throw std::invalid_argument("canonical code: order must be in [1, 8]");

  std::vector<int> color = stable_coloring(g);
  // Cells in ascending color order; positions are assigned cell by cell.
  std::map<int, std::vector<int>> cells;
  for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
  std::vector<std::vector<int>> groups;
  for (auto& [c, members] : cells) groups.push_back(std::move(members));

  const auto& edges = g.edges();
  std::vector<int> pos(n);
  std::uint32_t best = ~0u;

  // Odometer over the within-cell permutations.
  auto evaluate = [&]() {
    std::uint32_t code = 0;
    for (const Edge& e : edges) {
      int i = pos[e.u], j = pos[e.v];
      if (i > j) std::swap(i, j);
      code |= 1u << bit_shift(n, i, j);
    }
    best = std::min(best, code);
  };

  auto assign_positions = [&]() {
    int p = 0;
    for (const auto& grp : groups)
      for (int v : grp) pos[v] = p++;
  };

  assign_positions();
  evaluate();
  for (;;) {
    std::size_t k = groups.size();
    while (k-- > 0) {
      if (std::next_permutation(groups[k].begin(), groups[k].end())) break;
      // wrapped to ascending order; carry to the previous group
      if (k == 0) return CanonicalCode{n, best};
    }
    if (k == static_cast<std::size_t>(-1)) return CanonicalCode{n, best};
    assign_positions();
    evaluate();
  }
}

SignedGraph graph_from_code(const CanonicalCode& code) {
  const int n = code.n;
  if (n < 1 || n > 8) throw std::invalid_argument("canonical code: order must be in [1, 8]");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (code.bits >> bit_shift(n, i, j) & 1u) edges.push_back(Edge{i, j, +1});
  return SignedGraph(n, std::move(edges));
}

std::vector<SignedGraph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumeration supports 1 <= n <= 8");
  if (n == 1) return {SignedGraph(1, {})};

  // Every connected graph on n vertices arises from a connected graph on
  // n-1 vertices by adding one vertex with a nonempty neighborhood (remove
  // any non-cut vertex, e.g. a spanning-tree leaf).
  auto smaller = enumerate_connected_graphs(n - 1);
  std::set<std::uint32_t> codes;
  for (const SignedGraph& base : smaller) {
    for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
      std::vector<Edge> edges = base.edges();
      for (int v = 0; v < n - 1; ++v)
        if (mask >> v & 1) edges.push_back(Edge{v, n - 1, +1});
      codes.insert(canonical_code(SignedGraph(n, std::move(edges))).bits);
    }
  }
  std::vector<SignedGraph> out;
  out.reserve(codes.size());
  for (std::uint32_t bits : codes) out.push_back(graph_from_code(CanonicalCode{n, bits}));
  return out;
}

SwitchingBasis switching_basis(const SignedGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("switching basis: graph must be connected");
  const int n = g.order();
  auto adj = g.adjacency();
  std::vector<char> seen(n, 0);
  std::set<std::pair<int, int>> tree;
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (auto [w, s] : adj[u]) {
      (void)s;
      if (seen[w]) continue;
      seen[w] = 1;
      tree.insert(std::minmax(u, w));
      queue.push_back(w);
    }
  }
  SwitchingBasis basis;
  for (const Edge& e : g.edges()) {
    auto key = std::pair(e.u, e.v);
    if (tree.count(key))
      basis.tree_edges.push_back(key);
    else
      basis.free_edges.push_back(key);
  }
  return basis;
}

std::vector<SignedGraph> enumerate_switching_classes(const SignedGraph& g) {
  for (const Edge& e : g.edges())
    if (e.sign != +1)
      throw std::invalid_argument("switching classes: base graph must be all-positive");
  SwitchingBasis basis = switching_basis(g);
  const int d = static_cast<int>(basis.free_edges.size());
  if (d > 30) throw std::invalid_argument("switching classes: too many free edges");

  std::map<std::pair<int, int>, std::size_t> edge_index;
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) edge_index[{edges[i].u, edges[i].v}] = i;

  std::vector<SignedGraph> out;
  out.reserve(std::size_t(1) << d);
  for (std::uint32_t pattern = 0; pattern < (1u << d); ++pattern) {
    for (int i = 0; i < d; ++i)
      edges[edge_index[basis.free_edges[i]]].sign = (pattern >> i & 1) ? -1 : +1;
    out.push_back(SignedGraph(g.order(), edges));
  }
  return out;
}

SignedGraph switching_normal_form(const SignedGraph& g) {
  const int n = g.order();
  auto adj = g.adjacency();
  std::vector<int> theta(n, 0);
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
          queue.push_back(w);
        }
      }
    }
  }
  std::vector<int> flip;
  for (int v = 0; v < n; ++v)
    if (theta[v] < 0) flip.push_back(v);
  return switched(g, VertexSet(std::move(flip)));
}

}  // namespace sgt
