#pragma once

#include <cstdint>
#include <vector>

#include "sgt/signed_graph.hpp"

namespace sgt {

// Canonical form of an underlying (unsigned) graph on n <= 8 vertices: the
// minimum, over all vertex relabelings, of the upper-triangle adjacency
// bitstring read row by row with bit (0,1) most significant. Equal codes
// (for equal n) mean isomorphic underlying graphs.
struct CanonicalCode {
  int n = 0;
  std::uint32_t bits = 0;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_code(const SignedGraph& g);

// Rebuilds the all-positive graph encoded by a canonical code.
SignedGraph graph_from_code(const CanonicalCode& code);

// All connected underlying graphs on exactly n vertices (1 <= n <= 8), one
// all-positive representative per isomorphism class, sorted by canonical
// code. Counts: 1, 1, 2, 6, 21, 112, 853, 11117 for n = 1..8.
std::vector<SignedGraph> enumerate_connected_graphs(int n);

// The spanning-tree edges (DFS from vertex 0) and the remaining free edges
// of a connected graph. Switching can always make the tree edges positive,
// so the free-edge signs index the switching classes.
struct SwitchingBasis {
  std::vector<std::pair<int, int>> tree_edges;
  std::vector<std::pair<int, int>> free_edges;  // ascending
};
SwitchingBasis switching_basis(const SignedGraph& g);

// One representative per switching class of signings of a connected
// all-positive graph: tree edges positive, the 2^(m-n+1) sign patterns on
// the free edges in binary-counter order (bit i = free edge i negative).
std::vector<SignedGraph> enumerate_switching_classes(const SignedGraph& g);

// Switches g so that its spanning-tree edges (per component) are positive.
// Two signings of the same graph are switching-equivalent iff their normal
// forms coincide.
SignedGraph switching_normal_form(const SignedGraph& g);

}  // namespace sgt
