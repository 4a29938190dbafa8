#include <random>
#include <vector>

#include "common.hpp"
#include "doctest.h"
#include "graphlie/canonical.hpp"
#include "graphlie/errors.hpp"
#include "graphlie/morphisms.hpp"
#include "graphlie/serialize.hpp"
#include "oracles.hpp"

using namespace graphlie;

namespace {

std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("identity isomorphism induces the identity matrix") {
  Graph p = testutil::path(3);
  LieMorphism f = induce_lie_iso({p, p, {0, 1, 2}});
  CHECK(f.matrix() == QMatrix::identity(5));
  CHECK(f.claims_isomorphism());
  CHECK(verify_morphism(f));
}

TEST_CASE("order-reversing edge image picks up a sign") {
  Graph k2 = testutil::complete(2);
  LieMorphism f = induce_lie_iso({k2, k2, {1, 0}});
  QMatrix expect(3, 3);
  expect(1, 0) = 1;   // v0 -> v1
  expect(0, 1) = 1;   // v1 -> v0
  expect(2, 2) = -1;  // w0_1 -> -w0_1 since the pair order flips
  CHECK(f.matrix() == expect);
  CHECK(verify_morphism(f));

  GraphLieAlgebra a = build_algebra(k2);
  LieElement v0 = a.basis_element(BasisLabel::vertex(0));
  CHECK(f.apply(v0) == a.basis_element(BasisLabel::vertex(1)));
  CHECK(f.apply(bracket(v0, a.basis_element(BasisLabel::vertex(1)))) ==
        bracket(f.apply(v0),
                f.apply(a.basis_element(BasisLabel::vertex(1)))));

  SUBCASE("flipping that sign breaks the homomorphism law") {
    QMatrix tampered = expect;
    tampered(2, 2) = 1;
    LieMorphism bad(build_algebra(k2), build_algebra(k2), tampered, true);
    CHECK_FALSE(verify_morphism(bad));
  }
}

TEST_CASE("zero map is a homomorphism but no isomorphism") {
  GraphLieAlgebra a = build_algebra(testutil::complete(3));
  QMatrix zero(a.dimension(), a.dimension());
  CHECK(verify_morphism(LieMorphism(a, a, zero, false)));
  CHECK_FALSE(verify_morphism(LieMorphism(a, a, zero, true)));
}

TEST_CASE("morphism construction and apply reject mismatches") {
  GraphLieAlgebra a = build_algebra(testutil::path(3));
  GraphLieAlgebra b = build_algebra(testutil::complete(3));
  CHECK_THROWS_AS(LieMorphism(a, b, QMatrix::identity(5), true),
                  AlgebraMismatchError);  // b has dimension 6
  LieMorphism f(a, a, QMatrix::identity(5), true);
  CHECK_THROWS_AS(f.apply(b.basis_element(BasisLabel::vertex(0))),
                  AlgebraMismatchError);
}

TEST_CASE("induce_lie_iso rejects invalid graph isomorphisms") {
  Graph p = testutil::path(3);
  CHECK_THROWS_AS(induce_lie_iso({p, p, {1, 0, 2}}), InvalidGraphIsoError);
  CHECK_THROWS_AS(induce_lie_iso({p, p, {0, 0, 1}}), InvalidGraphIsoError);
  CHECK_THROWS_AS(induce_lie_iso({p, testutil::complete(3), {0, 1, 2}}),
                  InvalidGraphIsoError);
}

TEST_CASE("every exhaustively found isomorphism induces a verified morphism") {
  std::mt19937 rng(1618);
  for (const Graph& g : {testutil::path(4), testutil::cycle(5),
                         testutil::star(5), testutil::complete(4)}) {
    Graph h = g.relabeled(random_perm(g.n_vertices(), rng));
    for (const std::vector<int>& sigma : oracle::all_isomorphisms(g, h))
      CHECK(verify_morphism(induce_lie_iso({g, h, sigma})));
  }
}

TEST_CASE("induced morphisms compose") {
  std::mt19937 rng(2718);
  Graph g1 = testutil::cycle(5);
  for (int t = 0; t < 10; ++t) {
    std::vector<int> tau = random_perm(5, rng);
    std::vector<int> sigma = random_perm(5, rng);
    Graph g2 = g1.relabeled(tau);
    Graph g3 = g2.relabeled(sigma);
    std::vector<int> composed(5);
    for (int i = 0; i < 5; ++i) composed[i] = sigma[tau[i]];
    CHECK(induce_lie_iso({g1, g3, composed}).matrix() ==
          induce_lie_iso({g2, g3, sigma}).matrix() *
              induce_lie_iso({g1, g2, tau}).matrix());
  }
}

TEST_CASE("algebras_isomorphic returns a full positive certificate") {
  Graph g = testutil::path(4);
  Graph h = g.relabeled({2, 0, 3, 1});
  IsoCertificate cert =
      algebras_isomorphic(build_algebra(g), build_algebra(h));
  CHECK(cert.verdict == IsoVerdict::kIsomorphic);
  REQUIRE(cert.sigma.has_value());
  REQUIRE(cert.tau.has_value());
  CHECK_FALSE(cert.separator.has_value());
  GraphIso iso{g, h, *cert.sigma};
  CHECK(iso.is_valid());
  CHECK(induce_lie_iso(iso).matrix() == *cert.tau);
  CHECK(verify_morphism(
      LieMorphism(build_algebra(g), build_algebra(h), *cert.tau, true)));
}

TEST_CASE("algebras_isomorphic separates by the first differing invariant") {
  // Same dimension 6: complete(3) has derived dimension 3, path(3)+isolated
  // has 2.
  IsoCertificate cert = algebras_isomorphic(
      build_algebra(testutil::complete(3)),
      build_algebra(Graph::from_edges(4, {{0, 1}, {1, 2}})));
  CHECK(cert.verdict == IsoVerdict::kNotIsomorphic);
  CHECK_FALSE(cert.sigma.has_value());
  REQUIRE(cert.separator.has_value());
  CHECK(cert.separator->invariant == "dim_derived");
  CHECK(cert.separator->left_value == "3");
  CHECK(cert.separator->right_value == "2");

  SUBCASE("different dimensions separate on dim") {
    IsoCertificate c2 = algebras_isomorphic(
        build_algebra(testutil::path(3)), build_algebra(testutil::path(4)));
    REQUIRE(c2.separator.has_value());
    CHECK(c2.separator->invariant == "dim");
    CHECK(c2.separator->left_value == "5");
    CHECK(c2.separator->right_value == "7");
  }

  SUBCASE("equal dim and derived dim fall through to the center") {
    // Two disjoint edges vs. path(3)+isolated: dimension 6 and derived
    // dimension 2 on both sides, centers 2 vs 3.
    IsoCertificate c3 = algebras_isomorphic(
        build_algebra(Graph::from_edges(4, {{0, 1}, {2, 3}})),
        build_algebra(Graph::from_edges(4, {{0, 1}, {1, 2}})));
    REQUIRE(c3.separator.has_value());
    CHECK(c3.separator->invariant == "dim_center");
    CHECK(c3.separator->left_value == "2");
    CHECK(c3.separator->right_value == "3");
  }
}

TEST_CASE("invariant-blind pair falls back to the canonical graph separator") {
  // C6 and two disjoint triangles share every numeric invariant: dimension
  // 12, derived 6, center 6, class 2, all vertex ad-ranks 2.
  Graph c6 = testutil::cycle(6);
  Graph t2 =
      Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  GraphLieAlgebra a = build_algebra(c6), b = build_algebra(t2);
  CHECK(invariant_vector(a) == invariant_vector(b));
  IsoCertificate cert = algebras_isomorphic(a, b);
  CHECK(cert.verdict == IsoVerdict::kNotIsomorphic);
  REQUIRE(cert.separator.has_value());
  CHECK(cert.separator->invariant == "canonical_graph");
  CHECK(cert.separator->left_value != cert.separator->right_value);
  CHECK(parse_graph6(cert.separator->left_value) ==
        canonical_form(c6).canonical_graph);
}

TEST_CASE("decision agrees with graph isomorphism on labeled 4-vertex pairs") {
  std::vector<Graph> graphs;
  for (unsigned mask = 0; mask < 64; mask += 3) {
    std::vector<std::pair<int, int>> chosen;
    std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {1, 2},
                                           {0, 3}, {1, 3}, {2, 3}};
    for (int b = 0; b < 6; ++b)
      if (mask >> b & 1) chosen.push_back(pairs[b]);
    graphs.push_back(Graph::from_edges(4, chosen));
  }
  for (const Graph& g : graphs)
    for (const Graph& h : graphs) {
      bool graph_iso = are_isomorphic(g, h).has_value();
      IsoCertificate cert =
          algebras_isomorphic(build_algebra(g), build_algebra(h));
      CHECK((cert.verdict == IsoVerdict::kIsomorphic) == graph_iso);
    }
}

TEST_CASE("certificate JSON round-trip") {
  Graph g = testutil::path(4);
  Graph h = g.relabeled({3, 1, 0, 2});
  GraphLieAlgebra a = build_algebra(g), b = build_algebra(h);

  SUBCASE("isomorphic verdict") {
    IsoCertificate cert = algebras_isomorphic(a, b);
    nlohmann::json j = certificate_to_json(cert);
    CHECK(j.at("verdict") == "isomorphic");
    CHECK_FALSE(j.contains("separator"));
    IsoCertificate back = certificate_from_json(j, a, b);
    CHECK(back.verdict == IsoVerdict::kIsomorphic);
    CHECK(*back.sigma == *cert.sigma);
    CHECK(*back.tau == *cert.tau);

    nlohmann::json bad = j;
    bad["sigma"] = std::vector<int>{0, 1};
    CHECK_THROWS_AS(certificate_from_json(bad, a, b), ParseError);
    bad = j;
    bad["tau"].erase(0);
    CHECK_THROWS_AS(certificate_from_json(bad, a, b), ParseError);
    bad = j;
    bad["verdict"] = "maybe";
    CHECK_THROWS_AS(certificate_from_json(bad, a, b), ParseError);
  }

  SUBCASE("not_isomorphic verdict") {
    GraphLieAlgebra c = build_algebra(testutil::complete(3));
    IsoCertificate cert = algebras_isomorphic(a, c);
    nlohmann::json j = certificate_to_json(cert);
    CHECK(j.at("verdict") == "not_isomorphic");
    CHECK_FALSE(j.contains("sigma"));
    IsoCertificate back = certificate_from_json(j, a, c);
    CHECK(back.verdict == IsoVerdict::kNotIsomorphic);
    CHECK(back.separator->invariant == cert.separator->invariant);
    CHECK(back.separator->left_value == cert.separator->left_value);

    nlohmann::json bad = j;
    bad.erase("separator");
    CHECK_THROWS_AS(certificate_from_json(bad, a, c), ParseError);
  }
}
