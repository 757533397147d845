#include <doctest.h>

#include <string>

#include <random>

#include "helpers.hpp"
#include "nestchroma/enumerate.hpp"
#include "nestchroma/families.hpp"
#include "nestchroma/io.hpp"
#include "nestchroma/poset.hpp"

using namespace nestchroma;

TEST_CASE("edge list parsing") {
  GraphDocument doc = parse_edge_list("# a comment\nn 4\na b # inline\nb c\nc d\n");
  CHECK(doc.graph.vertex_count() == 4);
  CHECK(doc.graph.edge_count() == 3);
  CHECK(doc.labels == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(doc.graph.has_edge(0, 1));
  CHECK_FALSE(doc.graph.has_edge(0, 2));

  // numeric tokens keep first-seen order; fill labels dodge collisions with user tokens
  GraphDocument num = parse_edge_list("n 3\n2 1\n");
  CHECK(num.labels == std::vector<std::string>{"2", "1", "v2"});
  CHECK(num.graph.degree(2) == 0);
  GraphDocument plain = parse_edge_list("n 3\na b\n");
  CHECK(plain.labels == std::vector<std::string>{"a", "b", "2"});

  GraphDocument empty = parse_edge_list("n 0\n");
  CHECK(empty.graph.vertex_count() == 0);
}

TEST_CASE("edge list errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_edge_list(""), "empty input: missing \"n <count>\" header",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("x y\n"), "line 1: expected header \"n <count>\"",
                       ParseError);
  CHECK_THROWS_AS(parse_edge_list("m 4\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n -2\n"), ParseError);
  try {
    parse_edge_list("n 4\na b\nc\n");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.line_number == 3);
    CHECK(std::string(e.what()).rfind("line 3:", 0) == 0);
  }
  CHECK_THROWS_AS(parse_edge_list("n 4\na b c\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 1\na a\n"), ParseError);     // loop
  CHECK_THROWS_AS(parse_edge_list("n 2\na b\nb c\n"), ParseError);  // too many names
}

TEST_CASE("edge list round trip") {
  GraphDocument doc = parse_edge_list("n 5\nalpha beta\nbeta gamma\ndelta eps\n");
  GraphDocument again = parse_edge_list(write_edge_list(doc));
  CHECK(again.labels == doc.labels);
  CHECK(again.graph.edges() == doc.graph.edges());
}

TEST_CASE("graph6 knowns") {
  CHECK(write_graph6(Graph::from_edges(1, {})) == "@");
  CHECK(write_graph6(Graph::from_edges(0, {})) == "?");
  CHECK(write_graph6(complete(2)) == "A_");
  CHECK(write_graph6(complete(3)) == "Bw");
  CHECK(write_graph6(complete(4)) == "C~");
  CHECK(parse_graph6("DQc").edge_count() == 4);
  CHECK(is_isomorphic(parse_graph6("D~{"), complete(5)));
}

TEST_CASE("graph6 round trip") {
  GraphGenerator gen;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : gen.graphs_on(n)) {
      Graph back = parse_graph6(write_graph6(g));
      CHECK(back.edges() == g.edges());
    }
  std::mt19937_64 rng(41);
  for (int t = 0; t < 30; ++t) {
    Graph g = testutil::random_graph(20 + static_cast<int>(rng() % 30), 0.3, rng);
    CHECK(parse_graph6(write_graph6(g)).edges() == g.edges());
  }
  // long form header for n >= 63
  Graph big = testutil::random_graph(70, 0.1, rng);
  std::string enc = write_graph6(big);
  CHECK(enc[0] == 126);
  CHECK(parse_graph6(enc).edges() == big.edges());
}

TEST_CASE("graph6 tolerates prefixes and rejects junk") {
  CHECK(parse_graph6(">>graph6<<A_").edge_count() == 1);
  CHECK(parse_graph6("A_\r\n").edge_count() == 1);
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("A"), ParseError);     // truncated
  CHECK_THROWS_AS(parse_graph6("A_~"), ParseError);   // trailing data
  CHECK_THROWS_AS(parse_graph6("A\x1f"), ParseError);  // byte out of range
}

TEST_CASE("hasse dot export") {
  Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}});
  DedupMapping m = dedup(g);
  Poset p = weak_duplicate_poset(m.image);
  std::string dot = poset_hasse_dot(p, {"{1}", "{2}", "{3}", "{4}", "{5,6}"});
  CHECK(dot == "digraph poset {\n"
               "  rankdir=BT;\n"
               "  n0 [label=\"{1}\"];\n"
               "  n1 [label=\"{2}\"];\n"
               "  n2 [label=\"{3}\"];\n"
               "  n3 [label=\"{4}\"];\n"
               "  n4 [label=\"{5,6}\"];\n"
               "  n2 -> n4;\n"
               "}\n");
  // covers only: a 3-chain has two arrows, not three
  Poset chain = Poset::from_relations(3, {{0, 1}, {1, 2}});
  std::string cd = poset_hasse_dot(chain, {"a", "b", "c"});
  CHECK(cd.find("n0 -> n1") != std::string::npos);
  CHECK(cd.find("n1 -> n2") != std::string::npos);
  CHECK(cd.find("n0 -> n2") == std::string::npos);
}
