#include "cubeforge/order.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cubeforge {

FinPoset FinPoset::from_relation(int size, std::vector<std::vector<char>> leq,
                                 std::vector<std::string> names) {
  FinPoset p{size, std::move(names), std::move(leq)};
  if (static_cast<int>(p.leq.size()) != size)
    throw std::invalid_argument("poset: relation matrix has wrong size");
  for (int a = 0; a < size; ++a) {
    if (static_cast<int>(p.leq[a].size()) != size)
      throw std::invalid_argument("poset: relation matrix has wrong size");
    if (!p.leq[a][a]) throw std::invalid_argument("poset: relation not reflexive");
  }
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      if (p.leq[a][b] && p.leq[b][a] && a != b)
        throw std::invalid_argument("poset: antisymmetry fails at " + p.name_of(a) + "," +
                                    p.name_of(b));
      if (!p.leq[a][b]) continue;
      for (int c = 0; c < size; ++c)
        if (p.leq[b][c] && !p.leq[a][c])
          throw std::invalid_argument("poset: relation not transitive");
    }
  return p;
}

FinPoset FinPoset::from_json(const nlohmann::json& j) {
  const auto elements = j.at("elements").get<std::vector<std::string>>();
  const int n = static_cast<int>(elements.size());
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i)
    if (!index.emplace(elements[i], i).second)
      throw std::invalid_argument("poset: duplicate element '" + elements[i] + "'");

  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) leq[i][i] = 1;
  for (const auto& pair : j.at("leq")) {
    const auto a = index.find(pair.at(0).get<std::string>());
    const auto b = index.find(pair.at(1).get<std::string>());
    if (a == index.end() || b == index.end())
      throw std::invalid_argument("poset: leq references unknown element");
    leq[a->second][b->second] = 1;
  }
  for (int k = 0; k < n; ++k)  // transitive closure
    for (int a = 0; a < n; ++a)
      if (leq[a][k])
        for (int b = 0; b < n; ++b)
          if (leq[k][b]) leq[a][b] = 1;
  return from_relation(n, std::move(leq), elements);
}

std::optional<FinLattice> FinLattice::from_poset(const FinPoset& p) {
  const int n = p.size;
  FinLattice l;
  l.poset = p;
  l.meet.assign(n, std::vector<int>(n, -1));
  l.join.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int glb = -1, lub = -1;
      for (int c = 0; c < n && (glb == -1 || lub == -1); ++c) {
        if (glb == -1 && p.le(c, a) && p.le(c, b)) {
          bool greatest = true;
          for (int d = 0; d < n && greatest; ++d)
            if (p.le(d, a) && p.le(d, b) && !p.le(d, c)) greatest = false;
          if (greatest) glb = c;
        }
        if (lub == -1 && p.le(a, c) && p.le(b, c)) {
          bool least = true;
          for (int d = 0; d < n && least; ++d)
            if (p.le(a, d) && p.le(b, d) && !p.le(c, d)) least = false;
          if (least) lub = c;
        }
      }
      if (glb < 0 || lub < 0) return std::nullopt;
      l.meet[a][b] = glb;
      l.join[a][b] = lub;
    }
  return l;
}

bool FinLattice::distributive() const {
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]) return false;
  return true;
}

FinLattice boolean_lattice(int n) {
  const int size = 1 << n;
  std::vector<std::vector<char>> leq(size, std::vector<char>(size, 0));
  std::vector<std::string> names(size);
  for (int a = 0; a < size; ++a) {
    names[a] = std::to_string(a);
    for (int b = 0; b < size; ++b) leq[a][b] = (a & ~b) == 0;
  }
  auto l = FinLattice::from_poset(FinPoset::from_relation(size, std::move(leq), std::move(names)));
  return *l;
}

FinLattice downset_lattice(const FinPoset& p, std::vector<int>* embedding) {
  if (p.size > 20) throw std::invalid_argument("downset_lattice: poset too large");
  std::vector<std::uint32_t> downs;
  const std::uint32_t top = 1u << p.size;
  for (std::uint32_t s = 0; s < top; ++s) {
    bool closed = true;
    for (int a = 0; a < p.size && closed; ++a)
      if (s & (1u << a))
        for (int b = 0; b < p.size && closed; ++b)
          if (p.le(b, a) && !(s & (1u << b))) closed = false;
    if (closed) downs.push_back(s);
  }
  const int n = static_cast<int>(downs.size());
  auto index_of = [&](std::uint32_t s) {
    return static_cast<int>(std::lower_bound(downs.begin(), downs.end(), s) - downs.begin());
  };
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = "D" + std::to_string(downs[i]);
    for (int j = 0; j < n; ++j) leq[i][j] = (downs[i] & ~downs[j]) == 0;
  }
  FinLattice l;
  l.poset = FinPoset::from_relation(n, std::move(leq), std::move(names));
  l.meet.assign(n, std::vector<int>(n, 0));
  l.join.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      l.meet[i][j] = index_of(downs[i] & downs[j]);  // intersections and unions
      l.join[i][j] = index_of(downs[i] | downs[j]);  // of down-sets are down-sets
    }
  if (embedding) {
    embedding->assign(p.size, -1);
    for (int a = 0; a < p.size; ++a) {
      std::uint32_t da = 0;
      for (int b = 0; b < p.size; ++b)
        if (p.le(b, a)) da |= 1u << b;
      (*embedding)[a] = index_of(da);
    }
  }
  return l;
}

FinPoset quotient_poset(const FinPoset& p, const std::vector<std::vector<int>>& identify) {
  std::vector<int> cls(p.size);
  std::iota(cls.begin(), cls.end(), 0);
  for (const auto& group : identify)
    for (std::size_t i = 1; i < group.size(); ++i) {
      const int a = cls[group[0]], b = cls[group[i]];
      for (auto& c : cls)
        if (c == b) c = a;
    }
  std::vector<int> reps;
  std::vector<int> dense(p.size, -1);
  for (int i = 0; i < p.size; ++i)
    if (dense[cls[i]] == -1) {
      dense[cls[i]] = static_cast<int>(reps.size());
      reps.push_back(cls[i]);
    }
  const int n = static_cast<int>(reps.size());
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = p.name_of(reps[i]);
  for (int a = 0; a < p.size; ++a)
    for (int b = 0; b < p.size; ++b)
      if (p.le(a, b)) leq[dense[cls[a]]][dense[cls[b]]] = 1;
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      if (leq[a][k])
        for (int b = 0; b < n; ++b)
          if (leq[k][b]) leq[a][b] = 1;
  return FinPoset::from_relation(n, std::move(leq), std::move(names));
}

std::string canonical_form(const FinPoset& p) {
  const int n = p.size;
  if (n > 8) throw std::invalid_argument("canonical_form: poset too large");
  // invariant refinement first, then minimize over consistent relabelings
  std::vector<std::pair<std::vector<int>, int>> inv(n);
  for (int a = 0; a < n; ++a) {
    int down = 0, up = 0;
    for (int b = 0; b < n; ++b) {
      down += p.le(b, a);
      up += p.le(a, b);
    }
    inv[a] = {{down, up}, a};
  }
  std::sort(inv.begin(), inv.end());

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = inv[i].second;

  std::string best;
  auto render = [&](const std::vector<int>& q) {
    std::string s(static_cast<std::size_t>(n) * n, '0');
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (p.le(q[a], q[b])) s[static_cast<std::size_t>(a) * n + b] = '1';
    return s;
  };
  // permute only within equal-invariant groups
  std::vector<std::pair<int, int>> groups;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && inv[j].first == inv[i].first) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  auto rec = [&](auto&& self, std::size_t g) -> void {
    if (g == groups.size()) {
      std::string s = render(perm);
      if (best.empty() || s < best) best = std::move(s);
      return;
    }
    auto [lo, hi] = groups[g];
    std::sort(perm.begin() + lo, perm.begin() + hi);
    do self(self, g + 1);
    while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
  };
  rec(rec, 0);
  return std::to_string(n) + ":" + best;
}

bool order_isomorphic(const FinPoset& a, const FinPoset& b) {
  if (a.size != b.size) return false;
  return canonical_form(a) == canonical_form(b);
}

FinPoset induced_subposet(const FinPoset& p, const std::vector<int>& elements) {
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = p.name_of(elements[i]);
    for (int j = 0; j < n; ++j) leq[i][j] = p.le(elements[i], elements[j]);
  }
  return FinPoset::from_relation(n, std::move(leq), std::move(names));
}

std::vector<FinPoset> all_posets_of_size(int size) {
  if (size < 0 || size > 6) throw std::invalid_argument("all_posets_of_size: size must be 0..6");
  // Grow by adding a maximal element whose strict down-set is a down-closed
  // subset; every poset is reached in some linear-extension order, and
  // canonical forms weed out duplicates.
  std::vector<std::vector<std::vector<char>>> current(1);  // the empty poset
  for (int step = 0; step < size; ++step) {
    std::map<std::string, std::vector<std::vector<char>>> next;
    for (const auto& leq : current) {
      const int n = static_cast<int>(leq.size());
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool closed = true;
        for (int a = 0; a < n && closed; ++a)
          if (s & (1u << a))
            for (int bb = 0; bb < n && closed; ++bb)
              if (leq[bb][a] && !(s & (1u << bb))) closed = false;
        if (!closed) continue;
        auto bigger = leq;
        for (auto& row : bigger) row.push_back(0);
        bigger.emplace_back(n + 1, 0);
        bigger[n][n] = 1;
        for (int a = 0; a < n; ++a)
          if (s & (1u << a)) bigger[a][n] = 1;
        auto p = FinPoset::from_relation(n + 1, bigger);
        next.emplace(canonical_form(p), bigger);
      }
    }
    current.clear();
    for (auto& [key, leq] : next) current.push_back(std::move(leq));
  }
  std::vector<FinPoset> out;
  for (auto& leq : current) out.push_back(FinPoset::from_relation(size, leq));
  return out;
}

std::vector<FinLattice> all_lattices_of_size(int size) {
  std::vector<FinLattice> out;
  for (const auto& p : all_posets_of_size(size))
    if (auto l = FinLattice::from_poset(p)) out.push_back(std::move(*l));
  return out;
}

FinPoset join_irreducibles(const FinLattice& l) {
  const int n = l.size();
  std::vector<int> irr;
  for (int a = 0; a < n; ++a) {
    int lower_covers = 0;
    for (int b = 0; b < n; ++b) {
      if (b == a || !l.le(b, a)) continue;
      bool cover = true;
      for (int c = 0; c < n; ++c)
        if (c != a && c != b && l.le(b, c) && l.le(c, a)) cover = false;
      if (cover) ++lower_covers;
    }
    if (lower_covers == 1) irr.push_back(a);
  }
  return induced_subposet(l.poset, irr);
}

}  // namespace cubeforge
