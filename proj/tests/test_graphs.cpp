#include <string>
#include <vector>

#include "common.hpp"
#include "doctest.h"
#include "graphlie/errors.hpp"
#include "graphlie/graph.hpp"
#include "oracles.hpp"

using namespace graphlie;

TEST_CASE("from_edges normalizes, deduplicates, validates") {
  Graph g = Graph::from_edges(3, {{1, 0}, {0, 1}, {2, 1}});
  CHECK(g.n_vertices() == 3);
  CHECK(g.n_edges() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(1, 1));

  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), LoopEdgeError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), VertexOutOfRangeError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 0}}), VertexOutOfRangeError);
  CHECK_THROWS_AS(Graph::from_edges(-1, {}), VertexOutOfRangeError);
}

TEST_CASE("degree and isolated vertices") {
  Graph g = testutil::star(4);  // center 0, leaves 1..3
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(2) == 1);
  CHECK_THROWS_AS(g.degree(4), VertexOutOfRangeError);
  CHECK(g.n_isolated_vertices() == 0);

  Graph h = Graph::from_edges(5, {{0, 1}});
  CHECK(h.n_isolated_vertices() == 3);
  CHECK(testutil::edgeless(4).n_isolated_vertices() == 4);

  CHECK(degree_sequence(testutil::star(4)) == std::vector<int>{3, 1, 1, 1});
  CHECK(degree_sequence(testutil::path(4)) == std::vector<int>{2, 2, 1, 1});
}

TEST_CASE("relabeled permutes the edge set") {
  Graph p = testutil::path(3);
  Graph r = p.relabeled({1, 0, 2});  // 0<->1
  CHECK(r.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK(p.relabeled({0, 1, 2}) == p);
  CHECK_THROWS_AS(p.relabeled({0, 1}), VertexOutOfRangeError);
  CHECK_THROWS_AS(p.relabeled({0, 0, 1}), VertexOutOfRangeError);
  CHECK_THROWS_AS(p.relabeled({0, 1, 3}), VertexOutOfRangeError);
}

TEST_CASE("complement") {
  CHECK(testutil::complete(4).complement() == testutil::edgeless(4));
  CHECK(testutil::edgeless(4).complement() == testutil::complete(4));
  Graph p = testutil::path(3);
  CHECK(p.complement() == Graph::from_edges(3, {{0, 2}}));
  CHECK(p.complement().complement() == p);
}

TEST_CASE("GraphIso validity") {
  Graph p = testutil::path(3);
  CHECK(GraphIso{p, p, {0, 1, 2}}.is_valid());
  CHECK(GraphIso{p, p, {2, 1, 0}}.is_valid());
  CHECK_FALSE(GraphIso{p, p, {1, 0, 2}}.is_valid());  // breaks edge (1,2)
  CHECK_FALSE(GraphIso{p, p, {0, 0, 2}}.is_valid());
  CHECK_FALSE(GraphIso{p, p, {0, 1}}.is_valid());
  CHECK_FALSE(GraphIso{p, testutil::complete(3), {0, 1, 2}}.is_valid());
}

TEST_CASE("graph6 encoding of pinned graphs") {
  CHECK(to_graph6(testutil::edgeless(0)) == "?");
  CHECK(to_graph6(testutil::edgeless(1)) == "@");
  CHECK(to_graph6(testutil::complete(2)) == "A_");
  CHECK(to_graph6(testutil::edgeless(2)) == "A?");
  CHECK(to_graph6(testutil::path(3)) == "Bg");
  CHECK(to_graph6(testutil::complete(3)) == "Bw");
  CHECK(to_graph6(testutil::edgeless(6)) == "E???");
  CHECK(to_graph6(testutil::complete(5)) == "D~{");
}

TEST_CASE("graph6 agrees with the independent encoder") {
  for (const Graph& g :
       {testutil::path(5), testutil::cycle(6), testutil::star(7),
        testutil::petersen(), testutil::edgeless(3), testutil::complete(4)}) {
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
    CHECK(to_graph6(g) == oracle::graph6_encode(g.n_vertices(), pairs));
  }
}

TEST_CASE("graph6 parse round-trip and errors") {
  for (const Graph& g : {testutil::path(4), testutil::cycle(5),
                         testutil::petersen(), testutil::edgeless(7)})
    CHECK(parse_graph6(to_graph6(g)) == g);

  CHECK(parse_graph6("Bw") == testutil::complete(3));
  CHECK_THROWS_AS(parse_graph6(""), MalformedGraph6Error);
  CHECK_THROWS_AS(parse_graph6("B"), MalformedGraph6Error);       // truncated
  CHECK_THROWS_AS(parse_graph6("Bww"), MalformedGraph6Error);     // too long
  CHECK_THROWS_AS(parse_graph6("A@"), MalformedGraph6Error);      // padding bit
  CHECK_THROWS_AS(parse_graph6("B\x1f"), MalformedGraph6Error);  // byte < 63
  CHECK_THROWS_AS(parse_graph6("~??"), MalformedGraph6Error);  // n >= 63 form
  CHECK_THROWS_AS(to_graph6(testutil::edgeless(63)), MalformedGraph6Error);
}

TEST_CASE("edge list parsing") {
  Graph p = parse_edge_list("3\n0 1\n1 2\n");
  CHECK(p == testutil::path(3));
  CHECK(parse_edge_list("4") == testutil::edgeless(4));
  CHECK(parse_edge_list("# comment\n\n3\n0 1 # trailing comment\n\n1 2") ==
        testutil::path(3));

  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("# only a comment\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 0\n"), ParseError);  // loop
  CHECK_THROWS_AS(parse_edge_list("3\n0 5\n"), ParseError);  // out of range
  CHECK_THROWS_AS(parse_edge_list("-2\n"), ParseError);
}

TEST_CASE("edge list round-trip") {
  for (const Graph& g : {testutil::path(4), testutil::petersen(),
                         testutil::edgeless(3), testutil::complete(4)}) {
    CHECK(parse_edge_list(to_edge_list(g)) == g);
  }
  CHECK(to_edge_list(testutil::path(3)) == "3\n0 1\n1 2\n");
}
