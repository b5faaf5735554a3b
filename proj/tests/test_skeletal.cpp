#include "doctest.h"

#include "cubeforge/reedy.hpp"
#include "cubeforge/skeletal.hpp"

using namespace cubeforge;

namespace {

CubeMap word(const std::string& text, int dom) { return evaluate(parse_word(text, dom)); }

}  // namespace

TEST_CASE("dependency partitions group inputs by the output they feed") {
  const auto cs = SiteConfig::parse("cs");

  const auto f = tensor(word("m1", 2), word("p1", 1));  // (x1 and x2) with x3 unused
  auto dp = dependency_partition(cs, f);
  CHECK(dp.parts == std::vector<VarSet>{0b011});
  CHECK(dp.trivial == 0b100);

  // two joins interleaved by the middle swap: outputs read {1,3} and {2,4}
  const auto g = compose(tensor(word("j1", 2), word("j1", 2)), word("x2", 4));
  dp = dependency_partition(cs, g);
  CHECK(dp.parts == std::vector<VarSet>{0b0101, 0b1010});
  CHECK(dp.trivial == 0);

  dp = dependency_partition(cs, CubeMap::identity(3));
  CHECK(dp.parts == std::vector<VarSet>{0b001, 0b010, 0b100});
  CHECK(dp.trivial == 0);

  CHECK_THROWS_AS(dependency_partition(cs, word("d1-", 1)), std::invalid_argument);
}

TEST_CASE("pseudo-sections of the projection are the two endpoints") {
  HomTable homs(SiteConfig::parse("plain"), 1);
  const auto ps = pseudo_sections(homs, word("p1", 1));
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].table() == std::vector<std::uint16_t>{0});
  CHECK(ps[1].table() == std::vector<std::uint16_t>{1});
}

TEST_CASE("pseudo-sections of the meet connection are its unit faces") {
  HomTable homs(SiteConfig::parse("cws"), 2);
  const auto ps = pseudo_sections(homs, word("m1", 2));
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].table() == std::vector<std::uint16_t>{1, 3});  // (1, x)
  CHECK(ps[1].table() == std::vector<std::uint16_t>{2, 3});  // (x, 1)
}

TEST_CASE("pseudo-equality quotients by codomain isomorphisms") {
  const auto csr = SiteConfig::parse("csr");
  const auto p1 = word("p1", 2);
  const auto p2 = word("p2", 2);
  CHECK(is_pseudo_equal(csr, p1, p1));
  CHECK(is_pseudo_equal(csr, word("m1", 2), compose(word("r1", 1), word("m1", 2))));
  for (const char* name : {"plain", "cs", "csr"})
    CHECK_FALSE(is_pseudo_equal(SiteConfig::parse(name), p1, p2));
}

TEST_CASE("restricting the pseudo-section scan to matching injectives loses nothing") {
  for (const char* name : {"cs", "sr"}) {
    HomTable homs(SiteConfig::parse(name), 2);
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= n; ++m) {
        const auto& hs = homs.at(n, m);
        for (std::size_t i = 0; i < hs.size(); ++i) {
          if (!hs.surjective[i]) continue;
          const auto fast = pseudo_sections(homs, hs.maps[i]);
          std::vector<CubeMap> brute;
          for (int c = 0; c <= 2; ++c)
            for (const auto& cand : homs.at(c, n).maps)
              if (classify_map(compose(hs.maps[i], cand)).iso) brute.push_back(cand);
          std::sort(brute.begin(), brute.end());
          CHECK(brute == fast);
        }
      }
  }
}

TEST_CASE("strong skeletality holds on every small non-diagonal site") {
  for (const char* name : {"plain", "s", "r", "sr", "cw", "cv", "c", "cs", "cr", "csr", "cws",
                           "cvs"}) {
    HomTable homs(SiteConfig::parse(name), 2);
    const auto r = strong_skeletality_check(homs, 2);
    INFO(name);
    CHECK(r.pass());
    CHECK(r.stats.at("degeneracies") > 0);
  }
  // the plain site has no nontrivial isos, so this is plain skeletality
  HomTable plain(SiteConfig::parse("plain"), 4);
  CHECK(strong_skeletality_check(plain, 4).pass());
}

TEST_CASE("pseudo-section laws tie sections to the dependency partition") {
  for (const char* name : {"plain", "cs", "csr", "cws", "sr", "cr"}) {
    HomTable homs(SiteConfig::parse(name), 2);
    const auto r = pseudo_section_laws(homs, 2);
    INFO(name);
    CHECK(r.pass());
  }
  HomTable cs(SiteConfig::parse("cs"), 3);
  CHECK(pseudo_section_laws(cs, 3).pass());
}

TEST_CASE("distinct degeneracies have distinct pseudo-section sets, by hand") {
  const auto meet = word("m1", 2);
  const auto join = word("j1", 2);
  HomTable cs(SiteConfig::parse("cs"), 2);
  CHECK(pseudo_sections(cs, meet) != pseudo_sections(cs, join));
  CHECK_FALSE(is_pseudo_equal(SiteConfig::parse("cs"), meet, join));
  // reversing the output of a meet gives "not-and", not a join, so even with
  // reversals the two stay apart and so must their pseudo-section sets
  HomTable csr(SiteConfig::parse("csr"), 2);
  CHECK_FALSE(is_pseudo_equal(SiteConfig::parse("csr"), meet, join));
  CHECK(pseudo_sections(csr, meet) != pseudo_sections(csr, join));
}
