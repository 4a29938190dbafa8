#include <numeric>
#include <vector>

#include "common.hpp"
#include "doctest.h"
#include "graphlie/canonical.hpp"
#include "graphlie/errors.hpp"
#include "graphlie/graph_enumeration.hpp"
#include "oracles.hpp"

using namespace graphlie;

namespace {

int total_classes(GraphEnumerator& en, int v) {
  int total = 0;
  for (int e = 0; e <= v * (v - 1) / 2; ++e)
    total += int(en.classes(v, e).size());
  return total;
}

}  // namespace

TEST_CASE("per-edge-count classes match the brute-force oracle") {
  GraphEnumerator en;
  for (int v = 1; v <= 5; ++v)
    for (int e = 0; e <= v * (v - 1) / 2; ++e) {
      const std::vector<Graph>& got = en.classes(v, e);
      std::vector<Graph> brute = oracle::classes_bruteforce(v, e);
      REQUIRE(got.size() == brute.size());
      // Same classes, possibly under different representatives.
      for (size_t k = 0; k < got.size(); ++k) {
        bool matched = false;
        for (const Graph& b : brute)
          if (are_isomorphic(got[k], b).has_value()) {
            matched = true;
            break;
          }
        CHECK(matched);
      }
    }
}

TEST_CASE("total class counts per vertex count") {
  GraphEnumerator en;
  CHECK(total_classes(en, 1) == 1);
  CHECK(total_classes(en, 2) == 2);
  CHECK(total_classes(en, 3) == 4);
  CHECK(total_classes(en, 4) == 11);
  CHECK(total_classes(en, 5) == 34);
  CHECK(total_classes(en, 6) == 156);  // long-established count
}

TEST_CASE("representatives are canonical, sorted, distinct") {
  GraphEnumerator en;
  for (int e = 0; e <= 10; ++e) {
    const std::vector<Graph>& reps = en.classes(5, e);
    for (const Graph& g : reps) {
      CHECK(canonical_form(g).canonical_graph == g);
      CHECK(g.n_edges() == e);
      CHECK(g.n_vertices() == 5);
    }
    for (size_t i = 1; i < reps.size(); ++i) CHECK(reps[i - 1] < reps[i]);
  }
}

TEST_CASE("dense layers come from complements") {
  GraphEnumerator en;
  // Complementation is a bijection of isomorphism classes.
  CHECK(en.classes(5, 7).size() == en.classes(5, 3).size());
  CHECK(en.classes(6, 14).size() == en.classes(6, 1).size());
  CHECK(en.classes(4, 6) == std::vector<Graph>{testutil::complete(4)});
  CHECK(en.classes(4, 5).size() == 1);
  for (const Graph& g : en.classes(6, 12))
    CHECK(canonical_form(g).canonical_graph == g);
}

TEST_CASE("results are independent of the job count") {
  std::vector<Graph> serial = enumerate_graphs(6, 7, {.max_vertices = 6, .jobs = 1});
  std::vector<Graph> parallel = enumerate_graphs(6, 7, {.max_vertices = 6, .jobs = 4});
  CHECK(serial == parallel);
  CHECK(serial.size() == 24);  // matches the v=6 per-edge-count breakdown
}

TEST_CASE("bounds are enforced") {
  GraphEnumerator en;  // default bound: 8 vertices
  CHECK_THROWS_AS(en.classes(9, 0), OutOfBoundsError);
  CHECK_THROWS_AS(en.classes(0, 0), OutOfBoundsError);
  CHECK_THROWS_AS(en.classes(4, 7), OutOfBoundsError);
  CHECK_THROWS_AS(en.classes(4, -1), OutOfBoundsError);
  CHECK_THROWS_AS(GraphEnumerator({.max_vertices = 0}), OutOfBoundsError);
  CHECK_THROWS_AS(GraphEnumerator({.max_vertices = 65}), OutOfBoundsError);
  CHECK_THROWS_AS(GraphEnumerator({.max_vertices = 8, .jobs = 0}),
                  OutOfBoundsError);
  GraphEnumerator wide({.max_vertices = 10});
  CHECK(wide.classes(9, 1).size() == 1);
}
