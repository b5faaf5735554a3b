#include "doctest.h"

#include "cubeforge/diag.hpp"
#include "cubeforge/order.hpp"

using namespace cubeforge;

namespace {

FinPoset chain(int n) {
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) leq[a][b] = 1;
  return FinPoset::from_relation(n, std::move(leq));
}

FinPoset antichain(int n) {
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) leq[a][a] = 1;
  return FinPoset::from_relation(n, std::move(leq));
}

}  // namespace

TEST_CASE("poset construction validates the order axioms") {
  nlohmann::json bad;
  bad["elements"] = {"a", "b"};
  auto rel = nlohmann::json::array();
  rel.push_back(nlohmann::json::array({"a", "b"}));
  rel.push_back(nlohmann::json::array({"b", "a"}));
  bad["leq"] = rel;
  CHECK_THROWS_AS(FinPoset::from_json(bad), std::invalid_argument);

  nlohmann::json good = bad;
  good["leq"].erase(1);
  const auto p = FinPoset::from_json(good);
  CHECK(p.le(0, 1));
  CHECK_FALSE(p.le(1, 0));
}

TEST_CASE("downset lattices realize the standard examples") {
  CHECK(order_isomorphic(downset_lattice(antichain(3)).poset, boolean_lattice(3).poset));
  CHECK(order_isomorphic(downset_lattice(chain(2)).poset, chain(3)));
  CHECK(downset_lattice(fence_poset()).size() == 13);

  std::vector<int> embedding;
  const auto dl = downset_lattice(chain(3), &embedding);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(chain(3).le(a, b) == dl.le(embedding[a], embedding[b]));
}

TEST_CASE("poset and lattice enumeration hit the known small counts") {
  CHECK(all_posets_of_size(1).size() == 1);
  CHECK(all_posets_of_size(2).size() == 2);
  CHECK(all_posets_of_size(3).size() == 5);
  CHECK(all_posets_of_size(4).size() == 16);
  CHECK(all_posets_of_size(5).size() == 63);

  CHECK(all_lattices_of_size(1).size() == 1);
  CHECK(all_lattices_of_size(2).size() == 1);
  CHECK(all_lattices_of_size(3).size() == 1);
  CHECK(all_lattices_of_size(4).size() == 2);
  CHECK(all_lattices_of_size(5).size() == 5);
  CHECK(all_lattices_of_size(6).size() == 15);
}

TEST_CASE("images of monotone idempotents on small lattices are lattices") {
  for (int size = 1; size <= 6; ++size)
    for (const auto& l : all_lattices_of_size(size)) {
      const int n = l.size();
      std::vector<int> f(n, 0);
      while (true) {
        bool monotone = true, idempotent = true;
        for (int a = 0; a < n && monotone; ++a)
          for (int b = 0; b < n && monotone; ++b)
            if (l.le(a, b) && !l.le(f[a], f[b])) monotone = false;
        for (int a = 0; a < n && idempotent; ++a)
          if (f[f[a]] != f[a]) idempotent = false;
        if (monotone && idempotent) {
          std::vector<int> image;
          for (int a = 0; a < n; ++a)
            if (f[a] == a) image.push_back(a);
          CHECK(FinLattice::from_poset(induced_subposet(l.poset, image)).has_value());
        }
        int i = 0;
        while (i < n && ++f[i] == n) f[i++] = 0;
        if (i == n) break;
      }
    }
}

TEST_CASE("distributive small lattices are exactly downset lattices of their "
          "join-irreducibles") {
  int distributive_count = 0;
  for (int size = 1; size <= 6; ++size)
    for (const auto& l : all_lattices_of_size(size)) {
      const auto p = join_irreducibles(l);
      const bool reconstructs = order_isomorphic(downset_lattice(p).poset, l.poset);
      CHECK(reconstructs == l.distributive());
      if (l.distributive()) ++distributive_count;
    }
  CHECK(distributive_count == 1 + 1 + 1 + 2 + 3 + 5);  // distributive lattices by size

  // and every downset lattice of a small poset is distributive
  for (int size = 0; size <= 4; ++size)
    for (const auto& p : all_posets_of_size(size)) CHECK(downset_lattice(p).distributive());
}

TEST_CASE("quotients reject order cycles") {
  // a < b and c < d; identifying a~d and b~c creates a two-element cycle
  std::vector<std::vector<char>> leq(4, std::vector<char>(4, 0));
  for (int i = 0; i < 4; ++i) leq[i][i] = 1;
  leq[0][1] = 1;
  leq[2][3] = 1;
  const auto p = FinPoset::from_relation(4, leq);
  CHECK_THROWS_AS(quotient_poset(p, {{0, 3}, {1, 2}}), std::invalid_argument);
  CHECK(quotient_poset(p, {{1, 2}}).size == 3);
}

TEST_CASE("canonical forms identify isomorphic orders only") {
  CHECK_FALSE(order_isomorphic(chain(4), boolean_lattice(2).poset));
  // a relabeled diamond matches the Boolean square
  nlohmann::json j;
  j["elements"] = {"t", "l", "r", "b"};
  auto rel = nlohmann::json::array();
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"b", "l"}, {"b", "r"}, {"l", "t"}, {"r", "t"}})
    rel.push_back(nlohmann::json::array({a, b}));
  j["leq"] = rel;
  CHECK(order_isomorphic(FinPoset::from_json(j), boolean_lattice(2).poset));
}

TEST_CASE("the pentagon is a non-distributive lattice") {
  const auto n5 = pentagon_lattice();
  CHECK(n5.size() == 5);
  CHECK_FALSE(n5.distributive());
  CHECK(FinLattice::from_poset(n5.poset).has_value());
}
