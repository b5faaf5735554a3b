#include "doctest.h"

#include <random>

#include "cubeforge/cube.hpp"
#include "helpers.hpp"

using namespace cubeforge;
using cubeforge::testing::random_word;

namespace {

CubeMap word(const std::string& text, int dom) { return evaluate(parse_word(text, dom)); }

}  // namespace

TEST_CASE("identity tables are the vertex enumeration") {
  CHECK(CubeMap::identity(0).table() == std::vector<std::uint16_t>{0});
  CHECK(CubeMap::identity(1).table() == std::vector<std::uint16_t>{0, 1});
  CHECK(CubeMap::identity(3).table()[5] == 5);
}

TEST_CASE("composition is neutral against identities and associative") {
  const auto f = word("m1 . x1 . d2-", 2);  // some composite into dimension 1
  CHECK(compose(CubeMap::identity(f.cod()), f) == f);
  CHECK(compose(f, CubeMap::identity(f.dom())) == f);

  std::mt19937 rng(7);
  const auto cfg = SiteConfig::parse("csr");
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = evaluate(random_word(cfg, 2, 3, 4, rng));
    const auto b = evaluate(random_word(cfg, a.cod(), 3, 4, rng));
    const auto c = evaluate(random_word(cfg, b.cod(), 3, 4, rng));
    CHECK(compose(c, compose(b, a)) == compose(compose(c, b), a));
  }
}

TEST_CASE("a face is a section of the projection") {
  const auto pi = word("p1", 1);
  const auto face0 = word("d1-", 0);
  CHECK(compose(pi, face0) == CubeMap::identity(0));
}

TEST_CASE("the meet connection absorbs its unit face") {
  const auto conn = word("m1", 2);
  const auto unit = word("d1+", 1);  // insert constant 1 at slot 1
  CHECK(compose(conn, unit) == CubeMap::identity(1));
}

TEST_CASE("the swap is an involution") {
  const auto swap = word("x1", 2);
  CHECK(swap.table() == std::vector<std::uint16_t>{0, 2, 1, 3});
  CHECK(compose(swap, swap) == CubeMap::identity(2));
}

TEST_CASE("tensor glues blocks and is strictly associative") {
  CHECK(tensor(CubeMap::identity(1), CubeMap::identity(1)) == CubeMap::identity(2));

  const auto face0 = word("d1-", 0);  // constant vertex 0 of the interval
  const auto face1 = word("d1+", 0);
  CHECK(tensor(face0, face1).table() == std::vector<std::uint16_t>{2});

  std::mt19937 rng(11);
  const auto cfg = SiteConfig::parse("csr");
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = evaluate(random_word(cfg, 1, 2, 3, rng));
    const auto b = evaluate(random_word(cfg, 2, 2, 3, rng));
    const auto c = evaluate(random_word(cfg, 1, 2, 3, rng));
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
  }
}

TEST_CASE("composition distributes over tensor") {
  std::mt19937 rng(13);
  const auto cfg = SiteConfig::parse("csr");
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = evaluate(random_word(cfg, 1, 2, 3, rng));
    const auto f2 = evaluate(random_word(cfg, 2, 2, 3, rng));
    const auto g = evaluate(random_word(cfg, f.cod(), 2, 3, rng));
    const auto g2 = evaluate(random_word(cfg, f2.cod(), 2, 3, rng));
    CHECK(compose(tensor(g, g2), tensor(f, f2)) == tensor(compose(g, f), compose(g2, f2)));
  }
}

TEST_CASE("classify_map matches the set-theoretic notions") {
  const auto pi = word("p1", 1);
  CHECK(classify_map(pi).surjective);
  CHECK_FALSE(classify_map(pi).injective);

  const auto face = word("d1-", 0);
  CHECK(classify_map(face).injective);
  CHECK_FALSE(classify_map(face).surjective);

  CHECK(classify_map(word("x1", 2)).iso);

  // iso <=> injective and surjective and equal dimensions, exhaustively
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      const std::size_t points = std::size_t{1} << n;
      std::vector<std::uint16_t> t(points);
      const std::uint64_t top = 1ull << (m * points);
      for (std::uint64_t c = 0; c < top; ++c) {
        for (std::size_t v = 0; v < points; ++v)
          t[v] = static_cast<std::uint16_t>((c >> (v * m)) & ((1u << m) - 1));
        const auto tr = classify_map(CubeMap(n, m, t));
        CHECK(tr.iso == (tr.injective && tr.surjective && n == m));
      }
    }
}

TEST_CASE("dependency scans flips over every context") {
  const auto conn = word("m1", 2);
  auto d = dependency(conn);
  CHECK(d.by_output == std::vector<VarSet>{0b11});
  CHECK(d.trivial == 0);

  const auto proj = word("p1", 2);  // deletes coordinate 1
  d = dependency(proj);
  CHECK(d.by_output == std::vector<VarSet>{0b10});
  CHECK(d.trivial == 0b01);

  d = dependency(CubeMap::identity(3));
  for (int i = 0; i < 3; ++i) CHECK(d.by_output[i] == (VarSet{1} << i));
  CHECK(d.trivial == 0);
}

TEST_CASE("dependency of a tensor obeys the block rule") {
  std::mt19937 rng(17);
  const auto cfg = SiteConfig::parse("csr");
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = evaluate(random_word(cfg, 2, 2, 3, rng));
    const auto g = evaluate(random_word(cfg, 1, 2, 3, rng));
    const auto df = dependency(f), dg = dependency(g), dt = dependency(tensor(f, g));
    for (int i = 0; i < f.cod() + g.cod(); ++i) {
      VarSet expect = 0;
      if (i < f.cod())
        expect = df.by_output[i];
      else
        expect = dg.by_output[i - f.cod()] << f.dom();
      CHECK(dt.by_output[i] == expect);
    }
  }
}

TEST_CASE("vertex tables are validated on construction") {
  CHECK_THROWS_AS(CubeMap(1, 1, {0}), std::invalid_argument);     // wrong length
  CHECK_THROWS_AS(CubeMap(1, 1, {0, 2}), std::invalid_argument);  // entry out of range
  CHECK_THROWS_AS(CubeMap(-1, 0, {0}), std::invalid_argument);    // bad dimension
  CHECK_THROWS_AS(compose(word("p1", 1), word("p1", 1)), std::invalid_argument);
}
