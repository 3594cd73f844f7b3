#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "unimodal/graph.hpp"

using namespace unimodal;

TEST_CASE("t3mn builder follows the canonical order") {
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; n <= 4; ++n) {
      Graph g = build_t3mn(m, n);
      CHECK(g.vertex_count() == 2 * m + 2 * n + 10);
      CHECK(g.is_tree());
      CHECK(g.index_of("v0") == 0);
      CHECK(g.index_of("v13") == 6);
      CHECK(g.index_of("v13'") == 9);
      if (m > 0) {
        CHECK(g.index_of("v21") == 10);
        CHECK(g.index_of("v21'") == 10 + m);
      }
      if (n > 0) {
        CHECK(g.index_of("v31") == 10 + 2 * m);
        CHECK(g.index_of("v31'") == 10 + 2 * m + n);
      }
      CHECK(g.degree(0) == 3);
      CHECK(g.degree(1) == 4);
      CHECK(g.degree(2) == m + 1);
    }
}

TEST_CASE("the extended tree hangs a two-vertex path off v13'") {
  Graph g = build_t3mn_star(2, 1);
  CHECK(g.vertex_count() == 2 * 2 + 2 * 1 + 12);
  CHECK(g.is_tree());
  const VertexId x = g.index_of("x"), y = g.index_of("y");
  CHECK(x == 16);
  CHECK(y == 17);
  CHECK(g.adjacent(g.index_of("v13'"), x));
  CHECK(g.adjacent(x, y));
  CHECK(g.degree(y) == 1);
}

TEST_CASE("spider builders") {
  Graph s = build_spider_2(4);
  CHECK(s.vertex_count() == 9);
  CHECK(s.degree(0) == 4);
  CHECK(s.adjacent(s.index_of("v2"), s.index_of("v2'")));
  Graph s12 = build_spider_12(2, 3);
  CHECK(s12.vertex_count() == 1 + 2 + 6);
  CHECK(s12.degree(0) == 5);
  CHECK(build_spider_2(0).vertex_count() == 1);
}

TEST_CASE("from_edges rejects malformed input") {
  CHECK_THROWS_AS(Graph::from_edges({"a", "b"}, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges({"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges({"a", "b"}, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges({"a", "a"}, {}), std::invalid_argument);
}

TEST_CASE("forest and tree predicates") {
  CHECK(build_path(5).is_tree());
  CHECK_FALSE(build_complete(3).is_forest());
  Graph two = Graph::from_edges({"a", "b", "c"}, {{0, 1}});
  CHECK(two.is_forest());
  CHECK_FALSE(two.is_tree());
}

TEST_CASE("clan graph blows vertices up into cliques") {
  Graph p = build_path(3);
  std::vector<unsigned> a{2, 0, 1};
  Graph c = clan_graph(p, a);
  CHECK(c.vertex_count() == 3);
  CHECK(c.edge_count() == 1);  // the K2 from the 2; p3 alone
  std::vector<unsigned> b{1, 1, 1};
  CHECK(clan_graph(p, b).edge_count() == 2);
  std::vector<unsigned> d{2, 1, 0};
  Graph k3 = clan_graph(p, d);
  CHECK(k3.edge_count() == 3);  // K2 joined to a vertex: a triangle
  CHECK(k3.label(0) == clan_label("p1", 1));
}

TEST_CASE("components and bipartitions") {
  Graph g = Graph::from_edges({"a", "b", "c", "d", "e"}, {{0, 1}, {1, 2}, {3, 4}});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  auto bp = bipartition(g, comps[0]);
  REQUIRE(bp.has_value());
  CHECK(*bp == Bipartition{2, 1});
  Graph k3 = build_complete(3);
  auto all = connected_components(k3);
  CHECK_FALSE(bipartition(k3, all[0]).has_value());
}

TEST_CASE("induced subgraphs keep labels and order") {
  Graph g = build_path(5);
  std::vector<VertexId> keep{4, 0, 1};
  Graph h = induced_subgraph(g, keep);
  CHECK(h.labels() == std::vector<std::string>{"p1", "p2", "p5"});
  CHECK(h.edge_count() == 1);
  std::vector<VertexId> drop{2};
  Graph r = remove_vertices(g, drop);
  CHECK(r.vertex_count() == 4);
  CHECK(connected_components(r).size() == 2);
}

TEST_CASE("disjoint union prefixes labels") {
  std::vector<Graph> parts{build_path(2), build_path(3)};
  Graph u = disjoint_union(parts);
  CHECK(u.vertex_count() == 5);
  CHECK(u.edge_count() == 3);
  CHECK(u.label(0) == "c1:p1");
  CHECK(u.label(2) == "c2:p1");
}

TEST_CASE("rooted forest lists parents first") {
  Graph g = build_t3mn(1, 2);
  RootedForest rf = root_forest(g);
  std::vector<std::size_t> pos(g.vertex_count());
  for (std::size_t i = 0; i < rf.order.size(); ++i) pos[rf.order[i]] = i;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (rf.parent[v] != v) CHECK(pos[rf.parent[v]] < pos[v]);
  CHECK(rf.parent[0] == 0);
}
