#include "doctest.h"

#include "cubeforge/cubeset.hpp"

using namespace cubeforge;

namespace {

nlohmann::json swapped_faces(nlohmann::json fixture) {
  auto& actions = fixture["actions"];
  std::swap(actions["d1+@0"], actions["d1-@0"]);
  return fixture;
}

}  // namespace

TEST_CASE("representable fixtures validate and decompose cells by precomposition") {
  const auto cfg = SiteConfig::parse("cs");
  const auto X = TruncatedCubicalSet::load(representable_fixture(cfg, 1, 2));
  CHECK(X.trunc() == 2);
  CHECK(X.cells(0).size() == 2);  // the two endpoints
  CHECK(X.cells(1).size() == 3);  // identity and two constants
  CHECK(X.cells(2).size() == 6);

  // the meet-connection cell of the representable decomposes through it
  const auto dec = ez_decompose(X, 2, "0.0.0.1");
  CHECK(dec.degeneracy == evaluate(parse_word("m1", 2)));
  CHECK(dec.cell_dim == 1);
  CHECK(dec.cell_id == "0.1");  // the identity cell

  // nondegenerate cells decompose through themselves
  const auto triv = ez_decompose(X, 1, "0.1");
  CHECK(triv.degeneracy == CubeMap::identity(1));
  CHECK(triv.cell_id == "0.1");
}

TEST_CASE("the point representable degenerates everything to the vertex") {
  const auto X = TruncatedCubicalSet::load(representable_fixture(SiteConfig::parse("plain"), 0, 2));
  REQUIRE(X.cells(2).size() == 1);
  const auto dec = ez_decompose(X, 2, X.cells(2)[0]);
  CHECK(dec.cell_dim == 0);
  CHECK(dec.degeneracy.dom() == 2);
  CHECK(dec.degeneracy.cod() == 0);
}

TEST_CASE("swapped endpoint actions break functoriality with a word-pair witness") {
  const auto fixture = representable_fixture(SiteConfig::parse("cs"), 1, 2);
  CHECK_NOTHROW(TruncatedCubicalSet::load(fixture));
  try {
    TruncatedCubicalSet::load(swapped_faces(fixture));
    FAIL("expected a functoriality violation");
  } catch (const FunctorialityError& e) {
    CHECK_FALSE(e.word_a.empty());
    CHECK_FALSE(e.word_b.empty());
    CHECK(e.word_a != e.word_b);
  }
  // the plain site detects partial swaps just as well
  CHECK_THROWS_AS(
      TruncatedCubicalSet::load(swapped_faces(representable_fixture(SiteConfig::parse("plain"), 1, 2))),
      FunctorialityError);
}

TEST_CASE("the empty cubical set validates") {
  const auto cfg = SiteConfig::parse("cs");
  nlohmann::json j;
  j["site"] = "cs";
  j["trunc"] = 2;
  j["cells"] = nlohmann::json::object();
  auto actions = nlohmann::json::object();
  for (int k = 0; k <= 2; ++k)
    for (const auto& atom : atoms_from(cfg, k, 2))
      actions[atom.token() + "@" + std::to_string(k)] = nlohmann::json::object();
  j["actions"] = actions;
  const auto X = TruncatedCubicalSet::load(j);
  CHECK(X.cells(0).empty());
  CHECK(ez_uniqueness_check(X).pass());
}

TEST_CASE("malformed files are rejected") {
  const auto cfg = SiteConfig::parse("cs");
  auto good = representable_fixture(cfg, 1, 1);

  auto dup = good;
  dup["cells"]["0"].push_back(dup["cells"]["0"][0]);
  CHECK_THROWS(TruncatedCubicalSet::load(dup));

  auto missing = good;
  missing["actions"].erase("p1@1");
  CHECK_THROWS_WITH_AS(TruncatedCubicalSet::load(missing),
                       doctest::Contains("missing action"), std::runtime_error);

  auto unknown = good;
  unknown["actions"]["p1@1"]["0.1"] = "no-such-cell";
  CHECK_THROWS(TruncatedCubicalSet::load(unknown));
}

TEST_CASE("decomposition uniqueness holds for representables and vertex collapses") {
  for (const char* name : {"plain", "cs", "csr", "cws"}) {
    const auto cfg = SiteConfig::parse(name);
    for (int n = 0; n <= 2; ++n) {
      const auto X = TruncatedCubicalSet::load(representable_fixture(cfg, n, 2));
      INFO(name, " representable ", n);
      CHECK(ez_uniqueness_check(X).pass());
    }
    const auto Y = TruncatedCubicalSet::load(collapsed_vertex_fixture(cfg, 1, 2));
    INFO(name, " collapsed interval");
    CHECK(ez_uniqueness_check(Y).pass());
  }
}

TEST_CASE("the collapsed interval is a circle with one vertex") {
  const auto X = TruncatedCubicalSet::load(
      collapsed_vertex_fixture(SiteConfig::parse("plain"), 1, 2));
  CHECK(X.cells(0).size() == 1);
  CHECK(X.cells(1).size() == 2);  // the loop and the degenerate edge
  const auto dec = ez_decompose(X, 1, "pt");
  CHECK(dec.cell_dim == 0);
  CHECK(dec.degeneracy == evaluate(parse_word("p1", 1)));
}
