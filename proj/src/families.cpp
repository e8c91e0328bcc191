#include "sgt/families.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sgt {

namespace {

std::string join(const std::vector<int>& xs, char sep = ',') {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << sep;
    out << xs[i];
  }
  return out.str();
}

}  // namespace

std::string to_string(const FamilyLabel& label) {
  std::ostringstream out;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, CycleFamily>) {
          out << "Cycle(" << f.n << ", " << (f.balanced ? "balanced" : "unbalanced") << ')';
        } else if constexpr (std::is_same_v<T, PathFamily>) {
          out << "Path(" << f.n << ')';
        } else if constexpr (std::is_same_v<T, StarFamily>) {
          out << "Star(" << f.leaves << ')';
        } else if constexpr (std::is_same_v<T, CompleteMultipartiteFamily>) {
          out << "BalancedCompleteMultipartite[" << join(f.parts) << ']';
        } else if constexpr (std::is_same_v<T, CanonicalUnicyclicFamily>) {
          out << "CanonicalUnicyclic(g=" << f.girth << ", "
              << (f.balanced ? "balanced" : "unbalanced") << ", gaps=[" << join(f.stars.gaps)
              << "], leaves=[" << join(f.stars.leaves) << "])";
        } else if constexpr (std::is_same_v<T, PendantStarCycleFamily>) {
          out << "CycleWithPendantStar(g=" << f.girth << ", "
              << (f.balanced ? "balanced" : "unbalanced") << ", t=" << f.leaves << ')';
        } else if constexpr (std::is_same_v<T, ThetaFamily>) {
          out << "Theta(" << f.orders[0] << ',' << f.orders[1] << ',' << f.orders[2]
              << "; cycles=";
          for (int i = 0; i < 3; ++i) {
            if (i) out << ',';
            out << '(' << f.cycles[i].length << ',' << (f.cycles[i].sign > 0 ? '+' : '-') << ')';
          }
          out << ')';
        } else {
          out << "Other";
        }
      },
      label);
  return out.str();
}

// -- Constructors -------------------------------------------------------------

SignedGraph make_cycle(int n, bool balanced) {
  if (n < 3) throw std::invalid_argument("cycle: order must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1, +1});
  edges.push_back(Edge{0, n - 1, balanced ? +1 : -1});
  return SignedGraph(n, std::move(edges));
}

SignedGraph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path: order must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1, +1});
  return SignedGraph(n, std::move(edges));
}

SignedGraph make_star(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star: need at least one leaf");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back(Edge{0, i, +1});
  return SignedGraph(leaves + 1, std::move(edges));
}

SignedGraph make_complete_multipartite(const std::vector<int>& parts) {
  if (parts.size() < 2) throw std::invalid_argument("complete multipartite: need >= 2 parts");
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("complete multipartite: part sizes must be >= 1");
  std::vector<int> part_of;
  for (std::size_t k = 0; k < parts.size(); ++k)
    part_of.insert(part_of.end(), parts[k], static_cast<int>(k));
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.push_back(Edge{u, v, +1});
  return SignedGraph(n, std::move(edges));
}

SignedGraph make_canonical_unicyclic(int girth, const std::vector<PendantStarSpec>& stars,
                                     bool balanced) {
  if (girth < 3) throw std::invalid_argument("canonical unicyclic: girth must be >= 3");
  std::vector<PendantStarSpec> sorted = stars;
  std::sort(sorted.begin(), sorted.end(),
            [](const PendantStarSpec& a, const PendantStarSpec& b) {
              return a.position < b.position;
            });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].position < 0 || sorted[i].position >= girth)
      throw std::invalid_argument("canonical unicyclic: star position out of range");
    if (sorted[i].leaves < 1)
      throw std::invalid_argument("canonical unicyclic: star needs >= 1 leaf");
    if (i > 0 && sorted[i].position == sorted[i - 1].position)
      throw std::invalid_argument("canonical unicyclic: duplicate star position");
  }
  SignedGraph g = make_cycle(girth, balanced);
  std::vector<Edge> edges = g.edges();
  int next = girth;
  for (const auto& star : sorted)
    for (int i = 0; i < star.leaves; ++i) edges.push_back(Edge{star.position, next++, +1});
  return SignedGraph(next, std::move(edges));
}

SignedGraph make_cycle_with_pendant_star(int girth, bool balanced, int leaves) {
  if (girth < 3) throw std::invalid_argument("pendant-star cycle: girth must be >= 3");
  if (leaves < 1) throw std::invalid_argument("pendant-star cycle: need >= 1 leaf");
  SignedGraph g = make_cycle(girth, balanced);
  std::vector<Edge> edges = g.edges();
  const int center = girth;
  edges.push_back(Edge{0, center, +1});
  for (int i = 1; i <= leaves; ++i) edges.push_back(Edge{center, center + i, +1});
  return SignedGraph(girth + 1 + leaves, std::move(edges));
}

SignedGraph make_theta(int k, int l, int m, int sign_kl, int sign_lm) {
  std::array<int, 3> orders{k, l, m};
  int twos = 0;
  for (int o : orders) {
    if (o < 2) throw std::invalid_argument("theta: path orders must be >= 2");
    if (o == 2) ++twos;
  }
  if (twos > 1) throw std::invalid_argument("theta: at most one path may have order 2");
  if ((sign_kl != +1 && sign_kl != -1) || (sign_lm != +1 && sign_lm != -1))
    throw std::invalid_argument("theta: cycle signs must be +1 or -1");

  const int hub_a = 0, hub_b = 1;
  int next = 2;
  std::vector<Edge> edges;
  auto add_path = [&](int order, int first_sign) {
    int prev = hub_a;
    for (int i = 0; i < order - 2; ++i) {
      int cur = next++;
      edges.push_back(Edge{std::min(prev, cur), std::max(prev, cur), i == 0 ? first_sign : +1});
      prev = cur;
    }
    edges.push_back(
        Edge{std::min(prev, hub_b), std::max(prev, hub_b), order == 2 ? first_sign : +1});
  };
  add_path(k, sign_kl);
  add_path(l, +1);
  add_path(m, sign_lm);
  return SignedGraph(next, std::move(edges));
}

// -- Recognition --------------------------------------------------------------

std::optional<std::vector<int>> complete_multipartite_parts(const SignedGraph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  // Group vertices by their underlying neighborhoods; in a complete
  // multipartite graph the groups are the parts and every cross pair is
  // adjacent, i.e. each vertex is adjacent to everything outside its group.
  std::vector<std::vector<char>> row(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) row[e.u][e.v] = row[e.v][e.u] = 1;
  std::map<std::vector<char>, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[row[v]].push_back(v);
  if (groups.size() < 2) return std::nullopt;

  std::vector<int> part_of(n, -1);
  int id = 0;
  std::vector<int> sizes;
  for (const auto& [key, members] : groups) {
    for (int v : members) part_of[v] = id;
    sizes.push_back(static_cast<int>(members.size()));
    ++id;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((part_of[u] != part_of[v]) != static_cast<bool>(row[u][v])) return std::nullopt;
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool is_balanced_complete_multipartite(const SignedGraph& g) {
  return complete_multipartite_parts(g).has_value() && is_balanced(g);
}

std::optional<StarDecomposition> star_decomposition(const SignedGraph& g) {
  const int n = g.order();
  if (n < 4 || g.size() != n || !is_connected(g)) return std::nullopt;
  auto cycle = shortest_cycle(g);
  if (!cycle) return std::nullopt;
  const int girth = cycle->length();
  std::vector<int> cycle_index(n, -1);
  for (int i = 0; i < girth; ++i) cycle_index[cycle->vertices[i]] = i;

  auto deg = g.degrees();
  auto adj = g.adjacency();
  std::vector<int> leaf_count(girth, 0);
  for (int v = 0; v < n; ++v) {
    if (cycle_index[v] >= 0) continue;
    if (deg[v] != 1) return std::nullopt;
    int neighbor = -1;
    for (auto [w, s] : adj[v]) {
      (void)s;
      neighbor = w;
    }
    if (neighbor < 0 || cycle_index[neighbor] < 0) return std::nullopt;
    ++leaf_count[cycle_index[neighbor]];
  }

  std::vector<int> starred;
  for (int i = 0; i < girth; ++i)
    if (leaf_count[i] > 0) starred.push_back(i);
  const int t = static_cast<int>(starred.size());
  if (t == 0) return std::nullopt;

  // Normalize over direction and starting star: smallest (gaps, leaves).
  std::optional<std::pair<std::vector<int>, std::vector<int>>> best;
  for (int dir : {+1, -1}) {
    for (int start = 0; start < t; ++start) {
      std::vector<int> gaps(t), leaves(t);
      for (int i = 0; i < t; ++i) {
        int cur = starred[((start + dir * i) % t + t) % t];
        int nxt = starred[((start + dir * (i + 1)) % t + t) % t];
        gaps[i] = dir > 0 ? ((nxt - cur - 1) % girth + girth) % girth
                          : ((cur - nxt - 1) % girth + girth) % girth;
        leaves[i] = leaf_count[cur];
      }
      auto cand = std::pair(std::move(gaps), std::move(leaves));
      if (!best || cand < *best) best = std::move(cand);
    }
  }
  return StarDecomposition{t, std::move(best->first), std::move(best->second)};
}

const char* to_string(ParityCondition c) {
  switch (c) {
    case ParityCondition::single_star: return "single-star";
    case ParityCondition::all_gaps_odd: return "all-gaps-odd";
    case ParityCondition::one_even_gap: return "one-even-gap";
    case ParityCondition::neither: return "neither";
  }
  return "?";
}

ParityCondition parity_condition(const StarDecomposition& sd) {
  if (sd.t == 1) return ParityCondition::single_star;
  int even = 0;
  for (int gap : sd.gaps)
    if (gap % 2 == 0) ++even;
  if (even == 0) return ParityCondition::all_gaps_odd;
  if (even == 1) return ParityCondition::one_even_gap;
  return ParityCondition::neither;
}

namespace {

std::optional<PendantStarCycleFamily> recognize_pendant_star_cycle(const SignedGraph& g) {
  const int n = g.order();
  if (g.size() != n) return std::nullopt;
  auto cycle = shortest_cycle(g);
  if (!cycle) return std::nullopt;
  const int girth = cycle->length();
  if (n < girth + 2) return std::nullopt;
  std::vector<char> on_cycle(n, 0);
  for (int v : cycle->vertices) on_cycle[v] = 1;

  auto deg = g.degrees();
  auto adj = g.adjacency();
  int center = -1;
  for (int v = 0; v < n; ++v) {
    if (on_cycle[v] || deg[v] < 2) continue;
    if (center >= 0) return std::nullopt;
    center = v;
  }
  if (center < 0) return std::nullopt;

  int cycle_neighbors = 0, leaves = 0;
  for (auto [w, s] : adj[center]) {
    (void)s;
    if (on_cycle[w])
      ++cycle_neighbors;
    else if (deg[w] == 1)
      ++leaves;
    else
      return std::nullopt;
  }
  if (cycle_neighbors != 1 || leaves < 1) return std::nullopt;
  if (girth + 1 + leaves != n) return std::nullopt;  // stray pendants elsewhere
  return PendantStarCycleFamily{girth, cycle->sign > 0, leaves};
}

std::optional<ThetaFamily> recognize_theta(const SignedGraph& g) {
  const int n = g.order();
  if (g.size() != n + 1 || n < 4) return std::nullopt;
  auto deg = g.degrees();
  std::vector<int> hubs;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 3)
      hubs.push_back(v);
    else if (deg[v] != 2)
      return std::nullopt;
  }
  if (hubs.size() != 2) return std::nullopt;
  const int hub_a = hubs[0], hub_b = hubs[1];

  auto adj = g.adjacency();
  std::array<int, 3> orders{};
  std::array<int, 3> signs{};
  int found = 0, visited = 2;
  for (auto [w, s0] : adj[hub_a]) {
    int prev = hub_a, cur = w, sign = s0, order = 2;
    while (cur != hub_a && cur != hub_b) {
      ++visited;
      int nxt = -1, ns = 0;
      for (auto [x, s] : adj[cur])
        if (x != prev) {
          nxt = x;
          ns = s;
        }
      sign *= ns;
      prev = cur;
      cur = nxt;
      ++order;
    }
    if (cur == hub_a) return std::nullopt;  // walked around a circuit, not a theta
    orders[found] = order;
    signs[found] = sign;
    ++found;
  }
  if (found != 3 || visited != n) return std::nullopt;

  ThetaFamily f;
  std::array<ThetaCycle, 3> cycles{
      ThetaCycle{orders[0] + orders[1] - 2, signs[0] * signs[1]},
      ThetaCycle{orders[0] + orders[2] - 2, signs[0] * signs[2]},
      ThetaCycle{orders[1] + orders[2] - 2, signs[1] * signs[2]},
  };
  std::sort(orders.begin(), orders.end());
  std::sort(cycles.begin(), cycles.end());
  f.orders = orders;
  f.cycles = cycles;
  return f;
}

}  // namespace

FamilyLabel recognize(const SignedGraph& g) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("recognize: graph is empty");
  if (!is_connected(g)) throw std::invalid_argument("recognize: graph must be connected");
  const int m = g.size();
  auto deg = g.degrees();
  const int max_deg = *std::max_element(deg.begin(), deg.end());

  if (n >= 3 && m == n && max_deg == 2) return CycleFamily{n, is_balanced(g)};
  if (m == n - 1 && max_deg <= 2) return PathFamily{n};
  if (m == n - 1 && max_deg == n - 1 && n >= 4) return StarFamily{n - 1};
  if (auto parts = complete_multipartite_parts(g); parts && is_balanced(g))
    return CompleteMultipartiteFamily{std::move(*parts)};
  if (auto sd = star_decomposition(g)) {
    auto cycle = shortest_cycle(g);
    return CanonicalUnicyclicFamily{cycle->length(), cycle->sign > 0, std::move(*sd)};
  }
  if (auto ps = recognize_pendant_star_cycle(g)) return *ps;
  if (auto th = recognize_theta(g)) return *th;
  return OtherFamily{};
}

}  // namespace sgt
