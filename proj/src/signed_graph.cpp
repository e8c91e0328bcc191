#include "sgt/signed_graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sgt {

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 0) throw std::invalid_argument("vertex set: negative vertex id");
    if (i > 0 && members_[i] == members_[i - 1])
      throw std::invalid_argument("vertex set: duplicate vertex id");
  }
}

VertexSet VertexSet::full(int n) {
  if (n < 0) throw std::invalid_argument("vertex set: negative size");
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return VertexSet(std::move(all));
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

SignedGraph::SignedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("graph: negative order");
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v >= n_ || e.u >= e.v)
      throw std::invalid_argument("graph: edge endpoints must satisfy 0 <= u < v < n");
    if (e.sign != +1 && e.sign != -1)
      throw std::invalid_argument("graph: edge sign must be +1 or -1");
    if (i > 0 && edges_[i - 1].u == e.u && edges_[i - 1].v == e.v)
      throw std::invalid_argument("graph: duplicate edge");
  }
}

bool SignedGraph::has_edge(int u, int v) const { return sign(u, v) != 0; }

int SignedGraph::sign(int u, int v) const {
  if (u > v) std::swap(u, v);
  Edge probe{u, v, -1};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe,
                             [](const Edge& a, const Edge& b) {
                               return std::pair(a.u, a.v) < std::pair(b.u, b.v);
                             });
  if (it == edges_.end() || it->u != u || it->v != v) return 0;
  return it->sign;
}

std::vector<int> SignedGraph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<std::pair<int, int>>> SignedGraph::adjacency() const {
  std::vector<std::vector<std::pair<int, int>>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.u].emplace_back(e.v, e.sign);
    adj[e.v].emplace_back(e.u, e.sign);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<std::int8_t> SignedGraph::adjacency_matrix() const {
  std::vector<std::int8_t> a(static_cast<std::size_t>(n_) * n_, 0);
  for (const Edge& e : edges_) {
    a[static_cast<std::size_t>(e.u) * n_ + e.v] = static_cast<std::int8_t>(e.sign);
    a[static_cast<std::size_t>(e.v) * n_ + e.u] = static_cast<std::int8_t>(e.sign);
  }
  return a;
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

// Splits a line into whitespace-separated tokens, treating '\r' as space.
std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

int parse_int(const std::string& tok, int line, const char* what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected integer for ") + what + ", got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line, std::string("expected integer for ") + what + ", got '" + tok + "'");
  return value;
}

}  // namespace

SignedGraph parse_sgf(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  int n = 0, m = 0;
  std::vector<Edge> edges;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                             : end - start);
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;

    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;

    if (!have_header) {
      if (tokens.size() != 2) throw ParseError(line_no, "header must be 'n m'");
      n = parse_int(tokens[0], line_no, "n");
      m = parse_int(tokens[1], line_no, "m");
      if (n < 0) throw ParseError(line_no, "n must be nonnegative");
      if (m < 0) throw ParseError(line_no, "m must be nonnegative");
      have_header = true;
      continue;
    }

    if (tokens.size() != 3) throw ParseError(line_no, "edge line must be 'u v s'");
    int u = parse_int(tokens[0], line_no, "u");
    int v = parse_int(tokens[1], line_no, "v");
    if (u < 0 || v >= n) throw ParseError(line_no, "edge endpoint out of range");
    if (u >= v) throw ParseError(line_no, "edge must have u < v");
    int s;
    if (tokens[2] == "+")
      s = +1;
    else if (tokens[2] == "-")
      s = -1;
    else
      throw ParseError(line_no, "edge sign must be '+' or '-', got '" + tokens[2] + "'");
    for (const Edge& e : edges)
      if (e.u == u && e.v == v)
        throw ParseError(line_no,
                         "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges.push_back(Edge{u, v, s});
  }

  if (!have_header) throw ParseError(line_no, "missing 'n m' header");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(line_no, "header announced " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));

  return SignedGraph(n, std::move(edges));
}

std::string write_sgf(const SignedGraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges())
    out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
  return out.str();
}

SignedGraph read_sgf_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sgf(buf.str());
}

SignedGraph switched(const SignedGraph& g, const VertexSet& u_set) {
  for (int v : u_set.members())
    if (v >= g.order()) throw std::invalid_argument("switching set: vertex out of range");
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges)
    if (u_set.contains(e.u) != u_set.contains(e.v)) e.sign = -e.sign;
  return SignedGraph(g.order(), std::move(edges));
}

SignedGraph induced_subgraph(const SignedGraph& g, const VertexSet& s) {
  std::vector<int> index(g.order(), -1);
  const auto& keep = s.members();
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.order()) throw std::invalid_argument("induced subgraph: vertex out of range");
    index[keep[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back(Edge{index[e.u], index[e.v], e.sign});
  return SignedGraph(s.size(), std::move(edges));
}

SignedGraph disjoint_union(const SignedGraph& a, const SignedGraph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.order();
  for (const Edge& e : b.edges()) edges.push_back(Edge{e.u + shift, e.v + shift, e.sign});
  return SignedGraph(a.order() + b.order(), std::move(edges));
}

}  // namespace sgt
