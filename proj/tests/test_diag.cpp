#include "doctest.h"

#include <set>
#include "cubeforge/diag.hpp"
#include "helpers.hpp"

using namespace cubeforge;
using cubeforge::testing::monotone_function_count;

TEST_CASE("filtered map enumeration matches hand counts") {
  const auto two = boolean_lattice(1);
  const auto square = boolean_lattice(2);

  CHECK(enumerate_maps(two, two, MapClass::all).size() == 4);
  CHECK(enumerate_maps(two, two, MapClass::meet_preserving).size() == 3);  // no negation
  CHECK(enumerate_maps(square, two, MapClass::monotone).size() == 6);
  CHECK(enumerate_maps(square, two, MapClass::meet_preserving).size() == 5);
  CHECK(enumerate_maps(square, two, MapClass::join_preserving).size() == 5);
}

TEST_CASE("monotone map counts match the upset-counting oracle") {
  CHECK(monotone_function_count(2) == 6);
  CHECK(monotone_function_count(3) == 20);
  CHECK(enumerate_maps(boolean_lattice(3), boolean_lattice(1), MapClass::monotone).size() == 20);
  CHECK(homs_by_membership(SiteConfig::parse("dcs"), 3, 1).size() == 20);
}

TEST_CASE("monotone functions split along their last variable") {
  // f(x, xn) = f(x, 0) or (f(x, 1) and xn), exhaustively for small arities
  for (int n = 1; n <= 3; ++n) {
    const auto maps =
        enumerate_maps(boolean_lattice(n), boolean_lattice(1), MapClass::monotone);
    const int half = 1 << (n - 1);
    for (const auto& f : maps)
      for (int x = 0; x < half; ++x)
        for (int xn = 0; xn <= 1; ++xn)
          CHECK(f[x + xn * half] == (f[x] | (f[x + half] & xn)));
  }
}

TEST_CASE("diagonal sites match their order-theoretic descriptions") {
  struct Expect {
    const char* site;
    int n, m;
    std::size_t count;
  };
  for (const auto& e : std::initializer_list<Expect>{{"ds", 1, 1, 3},
                                                     {"dsr", 1, 1, 4},
                                                     {"dcws", 1, 1, 3},
                                                     {"dcws", 2, 1, 5},
                                                     {"dcvs", 2, 1, 5},
                                                     {"dcs", 2, 1, 6},
                                                     {"dcs", 2, 2, 36},
                                                     {"dcsr", 1, 1, 4},
                                                     {"dcsr", 2, 1, 16}}) {
    const auto id = identify_diagonal_site(SiteConfig::parse(e.site), e.n, e.m);
    INFO(e.site, " (", e.n, ",", e.m, ")");
    CHECK(id.equal);
    CHECK(id.closure_count == e.count);
    CHECK(id.characterization_count == e.count);
  }
  CHECK_THROWS_AS(identify_diagonal_site(SiteConfig::parse("cs"), 1, 1), std::invalid_argument);
}

TEST_CASE("sites with connections and diagonals have non-split idempotents") {
  for (const char* name : {"dcws", "dcvs", "dcs", "dcsr"}) {
    const auto witness = find_nonsplit_idempotent(SiteConfig::parse(name), 2);
    INFO(name);
    REQUIRE(witness.has_value());
    // the witness image has three elements, which no cube can carry as a retract
    std::set<std::uint16_t> image(witness->table().begin(), witness->table().end());
    CHECK(image.size() == 3);
  }
  CHECK_FALSE(find_nonsplit_idempotent(SiteConfig::parse("ds"), 2).has_value());
  CHECK_FALSE(find_nonsplit_idempotent(SiteConfig::parse("dsr"), 2).has_value());
}

TEST_CASE("idempotent images classify as lattices and realize every small lattice") {
  const auto kr = karoubi_images(SiteConfig::parse("dcs"), 2, 4);
  CHECK(kr.report.pass());
  REQUIRE(kr.image_classes.size() == 4);

  auto has = [&](const FinPoset& shape) {
    for (const auto& im : kr.image_classes)
      if (order_isomorphic(im, shape)) return true;
    return false;
  };
  auto chain = [](int n) {
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) leq[a][b] = 1;
    return FinPoset::from_relation(n, leq);
  };
  CHECK(has(chain(1)));
  CHECK(has(chain(2)));
  CHECK(has(chain(3)));
  CHECK(has(boolean_lattice(2).poset));
  CHECK_FALSE(has(chain(4)));  // needs a higher-dimensional cube
  CHECK(kr.report.stats.at("realized") == 5);  // all lattices of size <= 4
}

TEST_CASE("idempotent images in the single-connection sites are distributive") {
  for (const char* name : {"dcws", "dcvs"}) {
    const auto kr = karoubi_images(SiteConfig::parse(name), 2, 4);
    INFO(name);
    CHECK(kr.report.pass());
    for (const auto& im : kr.image_classes) {
      const auto lat = FinLattice::from_poset(im);
      REQUIRE(lat.has_value());
      CHECK(lat->distributive());
    }
  }
}

TEST_CASE("idempotent images in the full site are the nonempty small sets") {
  const auto kr = karoubi_images(SiteConfig::parse("dcsr"), 1, 2);
  CHECK(kr.report.pass());
  std::set<int> sizes;
  for (const auto& im : kr.image_classes) sizes.insert(im.size);
  CHECK(sizes == std::set<int>{1, 2});
}

TEST_CASE("the fence quotient kills the lattice property") {
  const auto r = factorization_obstructions_check(12, 10);
  CHECK(r.pass());
  CHECK(r.stats.at("fence_downsets") == 13);
  CHECK(r.stats.at("quotient_size") == 12);
  CHECK(r.stats.at("monotone_forced_size") == 12);
  CHECK(r.stats.at("meet_forced_size") == 5);
  CHECK(r.stats.at("monotone_candidates") >= 1);
  CHECK(r.note.find("no least upper bound") != std::string::npos);
}

TEST_CASE("the obstruction engine does find factorizations when they exist") {
  // collapsing the square onto the interval by its meet splits monotonely
  const auto square = boolean_lattice(2);
  const auto interval = boolean_lattice(1);
  std::vector<int> h(4);
  for (int v = 0; v < 4; ++v) h[v] = (v == 3) ? 1 : 0;
  const auto res = split_mono_obstruction(square, interval, h, Ambient::monotone_lattices, 4);
  CHECK(res.factorization_exists);
  CHECK(res.forced_size == 2);
}

TEST_CASE("bounded claims go vacuous above the forced intermediate size") {
  const auto square = boolean_lattice(2);
  const auto interval = boolean_lattice(1);
  std::vector<int> h(4);
  for (int v = 0; v < 4; ++v) h[v] = (v == 3) ? 1 : 0;
  const auto res = split_mono_obstruction(square, interval, h, Ambient::monotone_lattices, 1);
  CHECK_FALSE(res.factorization_exists);  // nothing of size <= 1 can occur
  CHECK(res.forced_size == 2);
}
