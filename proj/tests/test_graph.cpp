#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "nestchroma/bitset.hpp"
#include "nestchroma/enumerate.hpp"
#include "nestchroma/families.hpp"
#include "nestchroma/graph.hpp"

using namespace nestchroma;

TEST_CASE("bitset basics") {
  Bitset b(130);
  CHECK(b.none());
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.test(64));
  CHECK_FALSE(b.test(63));
  CHECK(b.first() == 0);
  CHECK(b.next(1) == 64);
  CHECK(b.next(65) == 129);
  CHECK(b.next(130) == -1);
  CHECK(b.to_vector() == std::vector<int>{0, 64, 129});
  b.reset(64);
  CHECK(b.count() == 2);

  Bitset small(10), big(10);
  small.set(3);
  big.set(3);
  big.set(7);
  CHECK(small.is_subset_of(big));
  CHECK_FALSE(big.is_subset_of(small));
  CHECK(small.intersects(big));
  Bitset other(10);
  other.set(5);
  CHECK_FALSE(small.intersects(other));
  CHECK((small & big) == small);
  CHECK((small | other).count() == 2);
}

TEST_CASE("graph construction and validation") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 2}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);  // repeated edge collapses
  CHECK(g.has_edge(2, 1));
  CHECK(g.degree(1) == 2);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(-1, {}), std::invalid_argument);

  std::vector<Bitset> adj(2, Bitset(2));
  adj[0].set(1);  // asymmetric on purpose
  CHECK_THROWS_AS(Graph::from_adjacency(adj), std::invalid_argument);
}

TEST_CASE("dedup quotient") {
  // 1-2-3 triangle, 3-4, 4-5, 4-6 (0-indexed here)
  Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}});
  DedupMapping m = dedup(g);
  CHECK(m.classes == std::vector<std::vector<int>>{{0}, {1}, {2}, {3}, {4, 5}});
  CHECK(m.class_of[4] == m.class_of[5]);
  CHECK(m.representative == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(m.image.vertex_count() == 5);
  CHECK(m.image.has_edge(3, 4));
  CHECK_FALSE(m.image.has_edge(2, 4));

  DedupMapping c4 = dedup(cycle(4));
  CHECK(c4.image.vertex_count() == 2);
  CHECK(c4.image.edge_count() == 1);

  // the image is always duplicate-free
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    Graph r = testutil::random_graph(8, 0.4, rng);
    DedupMapping dm = dedup(r);
    for (int u = 0; u < dm.image.vertex_count(); ++u)
      for (int v = 0; v < dm.image.vertex_count(); ++v)
        if (u != v) CHECK_FALSE(are_duplicates(dm.image, u, v));
  }
}

TEST_CASE("weak duplicates") {
  Graph p4 = path(4);
  CHECK(is_weak_duplicate(p4, 0, 2));  // {1} within {1,3}
  CHECK_FALSE(is_weak_duplicate(p4, 2, 0));
  CHECK(is_weak_duplicate(p4, 1, 1));
  Graph p3 = path(3);
  CHECK(are_duplicates(p3, 0, 2));
  CHECK_FALSE(are_duplicates(p3, 0, 1));
}

TEST_CASE("complement") {
  CHECK(complement(complete(5)).edge_count() == 0);
  CHECK(is_isomorphic(complement(cycle(5)), cycle(5)));
  Graph g = complement(path(4));
  CHECK(g.edge_count() == 3);
  CHECK(is_isomorphic(g, path(4)));
}

TEST_CASE("induced subgraphs and deletion") {
  Graph p5 = path(5);
  Graph even = induced_subgraph(p5, {0, 2, 4});
  CHECK(even.vertex_count() == 3);
  CHECK(even.edge_count() == 0);
  Graph mid = induced_subgraph(p5, {1, 2, 3});
  CHECK(mid.edge_count() == 2);
  CHECK_THROWS_AS(induced_subgraph(p5, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(p5, {5}), std::invalid_argument);

  Graph del = delete_vertex(p5, 2);
  CHECK(del.vertex_count() == 4);
  CHECK(del.edge_count() == 2);
}

TEST_CASE("components and connectivity") {
  Graph two = disjoint_union(complete(2), complete(2));
  auto comps = components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1});
  CHECK(comps[1] == std::vector<int>{2, 3});
  CHECK_FALSE(is_connected(two));
  CHECK(is_connected(petersen()));
  CHECK(is_connected(Graph::from_edges(0, {})));
  CHECK(components(Graph::from_edges(3, {})).size() == 3);
}

TEST_CASE("bipartition") {
  CHECK_FALSE(bipartition(cycle(5)).has_value());
  CHECK_FALSE(bipartition(petersen()).has_value());
  auto side = bipartition(cycle(6));
  REQUIRE(side.has_value());
  for (auto [u, v] : cycle(6).edges()) CHECK((*side)[u] != (*side)[v]);
  CHECK(bipartition(Graph::from_edges(3, {})).has_value());
  CHECK(bipartition(star(5)).has_value());
}

TEST_CASE("girth") {
  CHECK(girth(cycle(5)) == 5);
  CHECK(girth(petersen()) == 5);
  CHECK(girth(complete(4)) == 3);
  CHECK(girth(cube(3)) == 4);
  CHECK_FALSE(girth(path(6)).has_value());
  CHECK_FALSE(girth(Graph::from_edges(1, {})).has_value());
}

TEST_CASE("degree structure") {
  CHECK(regular_degree(petersen()) == 3);
  CHECK(regular_degree(cycle(7)) == 2);
  CHECK(regular_degree(Graph::from_edges(3, {})) == 0);
  CHECK_FALSE(regular_degree(path(3)).has_value());

  CHECK(leaves(path(4)) == std::vector<int>{0, 3});
  CHECK(leaf_class_count(path(4)) == 2);
  CHECK(leaf_class_count(path(3)) == 1);  // the two ends are duplicates
  CHECK(leaf_class_count(star(5)) == 1);
  CHECK(leaf_class_count(cycle(6)) == 0);
}

TEST_CASE("diamond and C4 freeness matches a naive search") {
  CHECK(is_diamond_c4_free(petersen()));
  CHECK(is_diamond_c4_free(complete(4)));  // induced notion: K4 is allowed
  CHECK_FALSE(is_diamond_c4_free(cycle(4)));
  CHECK_FALSE(is_diamond_c4_free(Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})));

  GraphGenerator gen;
  for (const Graph& g : gen.graphs_on(6))
    CHECK(is_diamond_c4_free(g) == testutil::naive_diamond_c4_free(g));
}

TEST_CASE("sperner neighbourhoods") {
  CHECK(neighbourhoods_form_sperner_family(disjoint_union(complete(2), complete(2))));
  CHECK(neighbourhoods_form_sperner_family(cycle(5)));
  CHECK_FALSE(neighbourhoods_form_sperner_family(path(4)));
  CHECK_FALSE(neighbourhoods_form_sperner_family(path(3)));  // duplicates are comparable
  CHECK(neighbourhoods_form_sperner_family(complete(3)));
}
