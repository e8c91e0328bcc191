#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sgt {

// One undirected signed edge. Stored with u < v and sign in {+1, -1}.
struct Edge {
  int u = 0;
  int v = 0;
  int sign = +1;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted duplicate-free set of vertex ids, used for switching sets,
// induced subgraphs and neighborhood layers.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> members);

  static VertexSet full(int n);

  const std::vector<int>& members() const { return members_; }
  bool contains(int v) const;
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  std::vector<int> members_;
};

// An undirected simple graph on vertices 0..n-1 whose edges carry signs.
// Edges are kept sorted with u < v; the representation is canonical, so
// operator== is structural equality of labeled signed graphs.
class SignedGraph {
public:
  SignedGraph() = default;
  SignedGraph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  // Sign of edge uv, or 0 if the edge is absent.
  int sign(int u, int v) const;

  std::vector<int> degrees() const;
  // adjacency()[u] lists (neighbor, sign) pairs sorted by neighbor.
  std::vector<std::vector<std::pair<int, int>>> adjacency() const;
  // Row-major n*n symmetric matrix with entries in {-1, 0, +1}.
  std::vector<std::int8_t> adjacency_matrix() const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Error raised by parse_sgf; line() is the 1-based offending line.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

private:
  int line_;
};

// Text format: first significant line "n m", then one line "u v s" per edge
// with u < v and s in {+, -}. '#' lines and blank lines are ignored.
SignedGraph parse_sgf(std::string_view text);
std::string write_sgf(const SignedGraph& g);
SignedGraph read_sgf_file(const std::string& path);

// Switching: negate every edge with exactly one endpoint in u_set.
SignedGraph switched(const SignedGraph& g, const VertexSet& u_set);

// Induced subgraph on s, relabeled 0..|s|-1 in ascending vertex order.
SignedGraph induced_subgraph(const SignedGraph& g, const VertexSet& s);

// Disjoint union; vertices of b are shifted by a.order().
SignedGraph disjoint_union(const SignedGraph& a, const SignedGraph& b);

}  // namespace sgt
