#include <doctest.h>

#include <algorithm>
#include <optional>
#include <queue>

#include "sgt/families.hpp"
#include "sgt/structure.hpp"
#include "test_util.hpp"

using namespace sgt;

namespace {

// Independent girth oracle: girth = min over edges (u,v) of
// dist_{G-uv}(u,v) + 1; the BFS here shares nothing with the library's.
std::optional<int> girth_oracle(const SignedGraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  int best = -1;
  for (const Edge& e : g.edges()) {
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[e.u] = 0;
    q.push(e.u);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (u == e.u && w == e.v) continue;  // skip the removed edge
        if (u == e.v && w == e.u) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    if (dist[e.v] >= 0 && (best < 0 || dist[e.v] + 1 < best)) best = dist[e.v] + 1;
  }
  if (best < 0) return std::nullopt;
  return best;
}

}  // namespace

TEST_CASE("connectivity") {
  CHECK(is_connected(make_path(1)));
  CHECK(is_connected(make_cycle(5, true)));
  CHECK_FALSE(is_connected(SignedGraph(3, {{0, 1, 1}})));
  CHECK_FALSE(is_connected(disjoint_union(make_cycle(3, true), make_cycle(3, true))));
  CHECK_THROWS_AS(is_connected(SignedGraph(0, {})), std::invalid_argument);
}

TEST_CASE("girth on fixed graphs") {
  CHECK(girth(make_cycle(3, true)) == 3);
  CHECK(girth(make_cycle(9, false)) == 9);
  CHECK(girth(make_path(6)) == std::nullopt);
  CHECK(girth(make_star(4)) == std::nullopt);
  CHECK(girth(make_complete_multipartite({1, 1, 1, 1})) == 3);  // K_4
  CHECK(girth(make_complete_multipartite({2, 3})) == 4);        // K_{2,3}
  CHECK(girth(testutil::petersen()) == 5);
  CHECK(girth(make_theta(5, 4, 5)) == 7);
  CHECK(girth(make_theta(5, 3, 5)) == 6);
  // Girth of a disconnected graph is the minimum over components.
  CHECK(girth(disjoint_union(make_cycle(5, true), make_cycle(3, true))) == 3);
  CHECK(girth(SignedGraph(1, {})) == std::nullopt);
}

TEST_CASE("girth matches an independent oracle on random graphs") {
  std::mt19937_64 rng(7100);
  for (int round = 0; round < 300; ++round) {
    int n = 3 + static_cast<int>(rng() % 6);
    SignedGraph g = testutil::random_graph(rng, n, 0.35);
    CHECK(girth(g) == girth_oracle(g));
  }
}

TEST_CASE("shortest cycle witnesses are valid, shortest, and lex-least") {
  SUBCASE("triangle inside K_4") {
    SignedGraph k4 = make_complete_multipartite({1, 1, 1, 1});
    auto w = shortest_cycle(k4);
    REQUIRE(w.has_value());
    CHECK(w->vertices == std::vector<int>{0, 1, 2});
    CHECK(w->sign == +1);
    CHECK(is_valid_cycle_witness(k4, *w));
  }
  SUBCASE("bowtie picks the lower triangle") {
    // Triangles {0,1,2} and {0,3,4} sharing vertex 0.
    SignedGraph bowtie(5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {3, 4, 1}, {0, 4, 1}});
    auto w = shortest_cycle(bowtie);
    REQUIRE(w.has_value());
    CHECK(w->vertices == std::vector<int>{0, 1, 2});
  }
  SUBCASE("unbalanced cycle carries its sign") {
    auto w = shortest_cycle(make_cycle(5, false));
    REQUIRE(w.has_value());
    CHECK(w->length() == 5);
    CHECK(w->sign == -1);
    CHECK(w->vertices.front() == 0);
    CHECK(w->vertices[1] < w->vertices.back());
  }
  SUBCASE("forest has none") { CHECK_FALSE(shortest_cycle(make_path(4)).has_value()); }
  SUBCASE("random graphs: length equals girth and witness validates") {
    std::mt19937_64 rng(7200);
    for (int round = 0; round < 200; ++round) {
      int n = 3 + static_cast<int>(rng() % 6);
      SignedGraph g = testutil::random_graph(rng, n, 0.4);
      auto gr = girth(g);
      auto w = shortest_cycle(g);
      REQUIRE(gr.has_value() == w.has_value());
      if (w) {
        CHECK(w->length() == *gr);
        CHECK(is_valid_cycle_witness(g, *w));
      }
    }
  }
}

TEST_CASE("cycle witness validation rejects junk") {
  SignedGraph c4 = make_cycle(4, true);
  CycleWitness w;
  w.vertices = {0, 1, 2, 3};
  w.sign = +1;
  CHECK(is_valid_cycle_witness(c4, w));
  w.sign = -1;
  CHECK_FALSE(is_valid_cycle_witness(c4, w));  // wrong sign
  w = {{0, 2, 1, 3}, +1};
  CHECK_FALSE(is_valid_cycle_witness(c4, w));  // 0-2 is not an edge
  w = {{1, 2, 3}, +1};
  CHECK_FALSE(is_valid_cycle_witness(c4, w));  // 1-3 closes no triangle
  w = {{0, 3, 1, 2}, +1};
  CHECK_FALSE(is_valid_cycle_witness(c4, w));  // not normalized: 3 > 2
  w = {{0, 1}, +1};
  CHECK_FALSE(is_valid_cycle_witness(c4, w));  // too short
  w = {{0, 1, 1, 2}, +1};
  CHECK_FALSE(is_valid_cycle_witness(c4, w));  // repeated vertex
}

TEST_CASE("balance detection") {
  CHECK(is_balanced(make_cycle(6, true)));
  CHECK_FALSE(is_balanced(make_cycle(6, false)));
  CHECK(is_balanced(make_path(5)));  // forests are balanced

  SUBCASE("negative cycle witness is a genuine negative cycle") {
    std::mt19937_64 rng(7300);
    for (int round = 0; round < 200; ++round) {
      int n = 3 + static_cast<int>(rng() % 7);
      SignedGraph g = testutil::random_graph(rng, n, 0.4);
      BalanceResult r = check_balance(g);
      if (!r.balanced) {
        REQUIRE(r.negative_cycle.has_value());
        CHECK(r.negative_cycle->sign == -1);
        CHECK(is_valid_cycle_witness(g, *r.negative_cycle));
      } else {
        CHECK_FALSE(r.negative_cycle.has_value());
      }
    }
  }
  SUBCASE("switchings of all-positive graphs stay balanced") {
    std::mt19937_64 rng(7400);
    for (int round = 0; round < 100; ++round) {
      int n = 2 + static_cast<int>(rng() % 7);
      SignedGraph g = testutil::random_connected(rng, n, 0.4, /*all_positive=*/true);
      CHECK(is_balanced(switched(g, testutil::random_proper_subset(rng, n))));
    }
  }
}

TEST_CASE("pendant vertices") {
  CHECK(pendant_vertices(make_star(3)).members() == std::vector<int>{1, 2, 3});
  CHECK(pendant_vertices(make_cycle(4, true)).empty());
  CHECK(pendant_vertices(make_path(4)).members() == std::vector<int>{0, 3});
}

TEST_CASE("neighborhood layers") {
  // Cycle C_5 with a 2-leaf pendant star through a cut vertex: the cut
  // vertex sits at distance 1, its leaves at distance 2.
  SignedGraph g = make_cycle_with_pendant_star(5, true, 2);
  auto cyc = shortest_cycle(g);
  REQUIRE(cyc.has_value());
  LayerPartition layers = neighborhood_layers(g, VertexSet(cyc->vertices));
  REQUIRE(layers.layers.size() == 2);
  CHECK(layers.at_distance(1).members() == std::vector<int>{5});
  CHECK(layers.at_distance(2).members() == std::vector<int>{6, 7});
  CHECK(layers.at_distance(3).empty());
  CHECK_THROWS_AS(neighborhood_layers(g, VertexSet{}), std::invalid_argument);
}

TEST_CASE("external paths") {
  SUBCASE("theta graph: the third path joins the two hubs") {
    SignedGraph g = make_theta(5, 4, 5);
    auto cyc = shortest_cycle(g);
    REQUIRE(cyc.has_value());
    REQUIRE(cyc->length() == 7);
    auto paths = external_paths(g, *cyc);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].length == 4);  // the 5-vertex path = 4 edges
    CHECK(paths[0].from < paths[0].to);
  }
  SUBCASE("K_{2,3}: one external path between the degree-3 pair") {
    SignedGraph g = make_complete_multipartite({2, 3});
    auto cyc = shortest_cycle(g);
    REQUIRE(cyc.has_value());
    REQUIRE(cyc->length() == 4);
    auto paths = external_paths(g, *cyc);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].length == 2);
  }
  SUBCASE("a chord counts as an external path of one edge") {
    // Diamond: 4-cycle 0-2-1-3 plus chord 0-1.
    SignedGraph diamond(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}});
    CycleWitness w{{0, 2, 1, 3}, +1};
    REQUIRE(is_valid_cycle_witness(diamond, w));
    auto paths = external_paths(diamond, w);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].from == 0);
    CHECK(paths[0].to == 1);
    CHECK(paths[0].length == 1);
  }
  SUBCASE("bare cycle has none") {
    SignedGraph c6 = make_cycle(6, false);
    auto cyc = shortest_cycle(c6);
    REQUIRE(cyc.has_value());
    CHECK(external_paths(c6, *cyc).empty());
  }
  SUBCASE("invalid witness throws") {
    SignedGraph c4 = make_cycle(4, true);
    CycleWitness bad{{0, 1, 2}, +1};
    CHECK_THROWS_AS(external_paths(c4, bad), std::invalid_argument);
  }
}
