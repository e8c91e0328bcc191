#pragma once

#include <optional>
#include <vector>

#include "sgt/signed_graph.hpp"

namespace sgt {

// A cycle reported as its vertex sequence c_0, ..., c_{k-1} (edges between
// consecutive entries and from the last back to the first), normalized so
// that c_0 is the smallest vertex on the cycle and c_1 < c_{k-1}.
struct CycleWitness {
  std::vector<int> vertices;
  int sign = +1;  // product of edge signs around the cycle

  int length() const { return static_cast<int>(vertices.size()); }
};

struct BalanceResult {
  bool balanced = true;
  // Present exactly when balanced is false; a cycle with sign -1.
  std::optional<CycleWitness> negative_cycle;
};

// Distance layers around a vertex set: layers()[k] holds the vertices at
// distance exactly k+1 from h.
struct LayerPartition {
  std::vector<VertexSet> layers;

  VertexSet at_distance(int d) const;  // d >= 1; empty set beyond the last layer
};

// A shortest path between two cycle vertices whose interior avoids the cycle.
struct ExternalPath {
  int from = 0;  // endpoints on the cycle, from < to
  int to = 0;
  int length = 0;  // number of edges

  friend auto operator<=>(const ExternalPath&, const ExternalPath&) = default;
};

bool is_connected(const SignedGraph& g);  // rejects the empty graph

// Length of a shortest cycle, or nullopt for forests. Signs are ignored.
std::optional<int> girth(const SignedGraph& g);

// A shortest cycle with the lexicographically least normalized vertex
// sequence among all shortest cycles; nullopt for forests.
std::optional<CycleWitness> shortest_cycle(const SignedGraph& g);

BalanceResult check_balance(const SignedGraph& g);
bool is_balanced(const SignedGraph& g);

// Vertices of degree exactly 1.
VertexSet pendant_vertices(const SignedGraph& g);

// BFS layers of g around the nonempty set h (distance 1, 2, ...).
LayerPartition neighborhood_layers(const SignedGraph& g, const VertexSet& h);

// For every pair of cycle vertices, the length of a shortest path between
// them that uses no cycle edge and no cycle vertex in its interior.
// Pairs with no such path are omitted. `cycle` must be a cycle of g.
std::vector<ExternalPath> external_paths(const SignedGraph& g, const CycleWitness& cycle);

// Test helper: does w describe a genuine cycle of g with the correct sign
// and normalization?
bool is_valid_cycle_witness(const SignedGraph& g, const CycleWitness& w);

}  // namespace sgt
