#include "cubeforge/sites.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_set>

namespace cubeforge {

namespace {

// ---------------------------------------------------------------------------
// Packed generator closure.
//
// A map out of □ⁿ into □ᵏ (k ≤ cap) is packed into a 128-bit key: 2ⁿ table
// entries of `width` bits each, width = max(cap, 1). The reach sets are kept
// per codomain dimension, so the codomain never needs to be stored.
// ---------------------------------------------------------------------------

using Key = unsigned __int128;

struct KeyHash {
  std::size_t operator()(Key x) const {
    std::uint64_t lo = static_cast<std::uint64_t>(x);
    std::uint64_t hi = static_cast<std::uint64_t>(x >> 64);
    std::uint64_t h = lo ^ (hi * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull);
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
  }
};

struct PackedClosure {
  int dom = 0, cap = 0, width = 1;
  std::vector<std::vector<Key>> order;  // per codomain, insertion order
  std::vector<std::unordered_set<Key, KeyHash>> seen;
  std::size_t total = 0;

  bool contains(int cod, Key k) const { return seen[cod].count(k) != 0; }
};

Key pack_table(const std::uint16_t* t, std::size_t entries, int width) {
  Key k = 0;
  for (std::size_t v = 0; v < entries; ++v) k |= Key(t[v]) << (v * width);
  return k;
}

void unpack_table(Key k, std::uint16_t* t, std::size_t entries, int width) {
  const Key mask = (Key(1) << width) - 1;
  for (std::size_t v = 0; v < entries; ++v) t[v] = static_cast<std::uint16_t>((k >> (v * width)) & mask);
}

std::shared_ptr<const PackedClosure> run_closure(const SiteConfig& cfg, int dom, int cap,
                                                 std::size_t budget) {
  if (dom < 0 || cap < dom) throw std::invalid_argument("closure: bad dimensions");
  const int width = std::max(cap, 1);
  const std::size_t entries = std::size_t{1} << dom;
  if (entries * width > 128)
    throw ResourceBoundError("closure: dimension bound exceeds packed-key capacity (2^dom*cap > 128)");

  auto cl = std::make_shared<PackedClosure>();
  cl->dom = dom;
  cl->cap = cap;
  cl->width = width;
  cl->order.resize(cap + 1);
  cl->seen.resize(cap + 1);

  std::vector<std::vector<std::pair<int, CubeMap>>> moves(cap + 1);  // (new cod, atom map)
  for (int k = 0; k <= cap; ++k)
    for (const auto& atom : atoms_from(cfg, k, cap))
      moves[k].emplace_back(k + atom.dim_delta(), atom_map(atom, k));

  std::vector<std::uint16_t> cur(entries), next(entries);
  std::deque<std::pair<int, Key>> queue;
  auto insert = [&](int cod, Key key) {
    if (!cl->seen[cod].insert(key).second) return;
    cl->order[cod].push_back(key);
    if (++cl->total > budget)
      throw ResourceBoundError("closure: resource bound exceeded (" + std::to_string(budget) +
                               " maps) for site " + cfg.name());
    queue.emplace_back(cod, key);
  };

  {
    std::vector<std::uint16_t> id(entries);
    for (std::size_t v = 0; v < entries; ++v) id[v] = static_cast<std::uint16_t>(v);
    insert(dom, pack_table(id.data(), entries, width));
  }
  while (!queue.empty()) {
    auto [cod, key] = queue.front();
    queue.pop_front();
    unpack_table(key, cur.data(), entries, width);
    for (const auto& [ncod, atom] : moves[cod]) {
      for (std::size_t v = 0; v < entries; ++v) next[v] = atom(cur[v]);
      insert(ncod, pack_table(next.data(), entries, width));
    }
  }
  return cl;
}

std::shared_ptr<const PackedClosure> cached_closure(const SiteConfig& cfg, int dom, int cap,
                                                    std::size_t budget) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const PackedClosure>> cache;
  const auto key = std::make_tuple(cfg.key(), dom, cap);
  {
    std::scoped_lock lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto cl = run_closure(cfg, dom, cap, budget);
  std::scoped_lock lock(mu);
  return cache.emplace(key, std::move(cl)).first->second;
}

std::vector<CubeMap> materialize(const PackedClosure& cl, int cod) {
  const std::size_t entries = std::size_t{1} << cl.dom;
  std::vector<std::uint16_t> t(entries);
  std::vector<CubeMap> out;
  out.reserve(cl.order[cod].size());
  for (Key k : cl.order[cod]) {
    unpack_table(k, t.data(), entries, cl.width);
    out.emplace_back(cl.dom, cod, t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Truth-table utilities for coordinate functions (dom ≤ 6, 64-bit tables).
// Bit v of a truth table is the value at input vertex v.
// ---------------------------------------------------------------------------

constexpr std::array<std::uint64_t, 6> kVarPattern = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

std::uint64_t all_mask(int n) { return n == 6 ? ~0ull : (1ull << (1u << n)) - 1; }

std::uint64_t flip_var(std::uint64_t x, int j) {
  const std::uint64_t pat = kVarPattern[j - 1];
  const int s = 1 << (j - 1);
  return ((x & pat) >> s) | ((x & ~pat) << s);
}

std::uint64_t or_fold(std::uint64_t x, VarSet vars) {
  for (int j = 1; j <= 6; ++j)
    if (vars & (VarSet{1} << (j - 1))) x |= flip_var(x, j);
  return x;
}

std::uint64_t and_fold(std::uint64_t x, VarSet vars) {
  for (int j = 1; j <= 6; ++j)
    if (vars & (VarSet{1} << (j - 1))) x &= flip_var(x, j);
  return x;
}

VarSet truth_dependency(std::uint64_t x, int n) {
  VarSet d = 0;
  for (int j = 1; j <= n; ++j)
    if (x != flip_var(x, j)) d |= VarSet{1} << (j - 1);
  return d;
}

struct Clone {
  bool meets = false, joins = false, negation = false, contiguous = false;
};

Clone clone_of(const SiteConfig& cfg) {
  return Clone{cfg.has_meet(), cfg.has_join(), cfg.reversals, !cfg.symmetries};
}

// Read-once formula tree over distinct variables; binary, leaves carry signs.
struct RoTree {
  int var = 0;        // leaf: 1-based variable index
  bool neg = false;   // leaf sign
  char op = 0;        // 0 = leaf, '&' or '|'
  std::unique_ptr<RoTree> lhs, rhs;
};

// Decides whether `truth` (depending on exactly `vars`) is a read-once
// formula in the clone, by recursive variable-set bipartition. Without
// symmetries only contiguous splits of the ascending variable list are
// admitted, which forces an in-order planar layout.
std::unique_ptr<RoTree> read_once(std::uint64_t truth, VarSet vars, int n, const Clone& clone) {
  const std::uint64_t all = all_mask(n);
  const int k = std::popcount(vars);
  if (k == 0) return nullptr;
  if (k == 1) {
    const int j = std::countr_zero(vars) + 1;
    const std::uint64_t pat = kVarPattern[j - 1] & all;
    auto leaf = std::make_unique<RoTree>();
    leaf->var = j;
    if (truth == pat) return leaf;
    if (clone.negation && truth == (~pat & all)) {
      leaf->neg = true;
      return leaf;
    }
    return nullptr;
  }

  std::vector<int> vs;
  for (int j = 1; j <= n; ++j)
    if (vars & (VarSet{1} << (j - 1))) vs.push_back(j);

  auto try_split = [&](VarSet s) -> std::unique_ptr<RoTree> {
    const VarSet t = vars & ~s;
    if (clone.meets) {
      const std::uint64_t g = or_fold(truth, t), h = or_fold(truth, s);
      if ((g & h) == truth) {
        auto l = read_once(g, s, n, clone);
        auto r = l ? read_once(h, t, n, clone) : nullptr;
        if (l && r) {
          auto node = std::make_unique<RoTree>();
          node->op = '&';
          node->lhs = std::move(l);
          node->rhs = std::move(r);
          return node;
        }
      }
    }
    if (clone.joins) {
      const std::uint64_t g = and_fold(truth, t), h = and_fold(truth, s);
      if ((g | h) == truth) {
        auto l = read_once(g, s, n, clone);
        auto r = l ? read_once(h, t, n, clone) : nullptr;
        if (l && r) {
          auto node = std::make_unique<RoTree>();
          node->op = '|';
          node->lhs = std::move(l);
          node->rhs = std::move(r);
          return node;
        }
      }
    }
    return nullptr;
  };

  if (clone.contiguous) {
    for (std::size_t cut = 1; cut < vs.size(); ++cut) {
      VarSet s = 0;
      for (std::size_t i = 0; i < cut; ++i) s |= VarSet{1} << (vs[i] - 1);
      if (auto r = try_split(s)) return r;
    }
  } else {
    // proper subsets containing the smallest variable, to halve the work
    const VarSet rest = vars & ~(VarSet{1} << (vs[0] - 1));
    for (VarSet sub = rest; sub != 0; sub = (sub - 1) & rest) {
      const VarSet s = (VarSet{1} << (vs[0] - 1)) | (rest & ~sub);
      if (auto r = try_split(s)) return r;
    }
  }
  return nullptr;
}

struct MemberAnalysis {
  std::vector<VarSet> deps;                        // per output
  VarSet trivial = 0;
  std::vector<std::unique_ptr<RoTree>> trees;      // per output; null for constants
  std::vector<int> constant_value;                 // per output; -1 if non-constant
};

std::optional<MemberAnalysis> analyze_nondiagonal(const SiteConfig& cfg, int n, int m,
                                                  const std::uint16_t* table) {
  if (n > 6) throw std::invalid_argument("membership test supports dom dimension <= 6");
  const std::size_t size = std::size_t{1} << n;
  MemberAnalysis a;
  a.deps.assign(m, 0);
  a.trees.resize(m);
  a.constant_value.assign(m, -1);

  std::vector<std::uint64_t> truth(m, 0);
  for (std::size_t v = 0; v < size; ++v)
    for (int i = 0; i < m; ++i)
      if (table[v] & (1u << i)) truth[i] |= 1ull << v;

  VarSet used = 0;
  for (int i = 0; i < m; ++i) {
    a.deps[i] = truth_dependency(truth[i], n);
    if (a.deps[i] & used) return std::nullopt;  // an input feeds two outputs
    used |= a.deps[i];
    if (a.deps[i] == 0) a.constant_value[i] = truth[i] ? 1 : 0;
  }
  a.trivial = static_cast<VarSet>(((VarSet{1} << n) - 1) & ~used);

  if (!cfg.symmetries) {
    // nontrivial blocks must be ordered intervals of the nontrivial variables
    int prev_max = 0;
    for (int i = 0; i < m; ++i) {
      if (a.deps[i] == 0) continue;
      const int lo = std::countr_zero(a.deps[i]) + 1;
      const int hi = 32 - std::countl_zero(a.deps[i]);
      if (lo <= prev_max) return std::nullopt;
      prev_max = hi;
    }
  }

  const Clone clone = clone_of(cfg);
  for (int i = 0; i < m; ++i) {
    if (a.deps[i] == 0) continue;
    a.trees[i] = read_once(truth[i], a.deps[i], n, clone);
    if (!a.trees[i]) return std::nullopt;
  }
  return a;
}

bool member_diagonal(const SiteConfig& cfg, int n, int m, const std::uint16_t* table) {
  const std::size_t size = std::size_t{1} << n;
  if (cfg.connections == Connections::both && cfg.reversals) return true;  // every map
  if (cfg.connections == Connections::both) {                              // monotone maps
    for (std::size_t v = 0; v < size; ++v)
      for (int j = 0; j < n; ++j) {
        const std::size_t w = v | (std::size_t{1} << j);
        if (w != v && (table[v] & ~table[w]) != 0) return false;
      }
    return true;
  }
  if (cfg.connections == Connections::meet) {  // binary-meet-preserving
    for (std::size_t v = 0; v < size; ++v)
      for (std::size_t w = v; w < size; ++w)
        if (table[v & w] != (table[v] & table[w])) return false;
    return true;
  }
  if (cfg.connections == Connections::join) {  // binary-join-preserving
    for (std::size_t v = 0; v < size; ++v)
      for (std::size_t w = v; w < size; ++w)
        if (table[v | w] != (table[v] | table[w])) return false;
    return true;
  }
  // no connections: every coordinate is constant or a (possibly negated) literal
  for (int i = 0; i < m; ++i) {
    std::uint64_t truth = 0;
    for (std::size_t v = 0; v < size; ++v)
      if (table[v] & (1u << i)) truth |= 1ull << v;
    const std::uint64_t all = all_mask(n);
    if (truth == 0 || truth == all) continue;
    bool literal = false;
    for (int j = 1; j <= n && !literal; ++j) {
      const std::uint64_t pat = kVarPattern[j - 1] & all;
      if (truth == pat) literal = true;
      if (cfg.reversals && truth == (~pat & all)) literal = true;
    }
    if (!literal) return false;
  }
  return true;
}

}  // namespace

bool is_member_table(const SiteConfig& cfg, int n, int m, const std::uint16_t* table) {
  if (cfg.diagonals) return member_diagonal(cfg, n, m, table);
  return analyze_nondiagonal(cfg, n, m, table).has_value();
}

bool is_member(const SiteConfig& cfg, const CubeMap& f) {
  cfg.validate();
  return is_member_table(cfg, f.dom(), f.cod(), f.table().data());
}

std::vector<CubeMap> iso_group(const SiteConfig& cfg, int n) {
  cfg.validate();
  if (n > 6) throw std::invalid_argument("iso_group supports dimension <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  if (cfg.symmetries) {
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  } else {
    perms.push_back(p);
  }
  const std::uint16_t sign_top = cfg.reversals ? static_cast<std::uint16_t>(1u << n) : 1;

  std::vector<CubeMap> out;
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint16_t> t(size);
  for (const auto& perm : perms)
    for (std::uint16_t sign = 0; sign < sign_top; ++sign) {
      for (std::size_t v = 0; v < size; ++v) {
        std::size_t w = 0;
        for (int j = 0; j < n; ++j) w |= ((v >> j) & 1) << perm[j];
        t[v] = static_cast<std::uint16_t>(w ^ sign);
      }
      out.emplace_back(n, n, t);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// In-order leaves of a read-once tree (planar layout).
void planar_leaves(const RoTree& t, std::vector<const RoTree*>& out) {
  if (t.op == 0) {
    out.push_back(&t);
    return;
  }
  planar_leaves(*t.lhs, out);
  planar_leaves(*t.rhs, out);
}

int tree_size(const RoTree& t) {
  return t.op == 0 ? 1 : tree_size(*t.lhs) + tree_size(*t.rhs);
}

// Emits the connection atoms collapsing the block rooted at `t`, whose leaves
// currently occupy consecutive slots starting at `base` (1-based).
void emit_connections(const RoTree& t, int base, std::vector<GeneratorAtom>& out) {
  if (t.op == 0) return;
  emit_connections(*t.lhs, base, out);
  emit_connections(*t.rhs, base + 1, out);
  out.push_back(GeneratorAtom{t.op == '&' ? AtomKind::meet : AtomKind::join, base, -1});
}

}  // namespace

std::optional<GeneratorWord> structured_word(const SiteConfig& cfg, const CubeMap& f) {
  cfg.validate();
  if (cfg.diagonals) throw std::invalid_argument("structured_word requires a non-diagonal site");
  auto analysis = analyze_nondiagonal(cfg, f.dom(), f.cod(), f.table().data());
  if (!analysis) return std::nullopt;
  const auto& a = *analysis;

  GeneratorWord w{f.dom(), {}};

  // projections: delete trivial inputs, highest slot first
  std::vector<int> trivial;
  for (int j = f.dom(); j >= 1; --j)
    if (a.trivial & (VarSet{1} << (j - 1))) {
      w.levels.push_back(GeneratorAtom{AtomKind::proj, j, -1});
      trivial.push_back(j);
    }

  // rank of each surviving input among the nontrivial ones
  std::vector<int> rank(f.dom() + 1, 0);
  {
    int r = 0;
    for (int j = 1; j <= f.dom(); ++j)
      if (!(a.trivial & (VarSet{1} << (j - 1)))) rank[j] = ++r;
  }

  // reversals: normalize negated leaves
  std::vector<const RoTree*> leaves_by_output;
  for (int i = 0; i < f.cod(); ++i) {
    if (!a.trees[i]) continue;
    std::vector<const RoTree*> ls;
    planar_leaves(*a.trees[i], ls);
    for (const auto* leaf : ls)
      if (leaf->neg) w.levels.push_back(GeneratorAtom{AtomKind::rev, rank[leaf->var], -1});
  }

  // symmetries: sort the surviving inputs into per-output planar order
  std::vector<int> desired;  // ranks in target order
  for (int i = 0; i < f.cod(); ++i) {
    if (!a.trees[i]) continue;
    std::vector<const RoTree*> ls;
    planar_leaves(*a.trees[i], ls);
    for (const auto* leaf : ls) desired.push_back(rank[leaf->var]);
  }
  {
    std::vector<int> arr(desired.size());
    for (std::size_t i = 0; i < arr.size(); ++i) arr[i] = static_cast<int>(i) + 1;
    for (std::size_t t = 0; t < desired.size(); ++t) {
      std::size_t u = t;
      while (arr[u] != desired[t]) ++u;
      for (; u > t; --u) {
        std::swap(arr[u], arr[u - 1]);
        w.levels.push_back(GeneratorAtom{AtomKind::sym, static_cast<int>(u), -1});
        if (!cfg.symmetries) return std::nullopt;  // cannot happen for members
      }
    }
  }

  // connections: collapse each block to one coordinate
  {
    int base = 1;
    for (int i = 0; i < f.cod(); ++i) {
      if (!a.trees[i]) continue;
      emit_connections(*a.trees[i], base, w.levels);
      ++base;
    }
  }

  // faces: reinsert constant outputs in ascending output order
  for (int i = 0; i < f.cod(); ++i)
    if (a.constant_value[i] >= 0)
      w.levels.push_back(GeneratorAtom{AtomKind::face, i + 1, a.constant_value[i]});

  if (evaluate(w) != f)
    throw std::logic_error("structured_word: reconstruction mismatch (membership bug)");
  return w;
}

HomSet enumerate_homs(const SiteConfig& cfg, int n, int m, int slack) {
  return enumerate_homs(cfg, n, m, EnumOptions{slack});
}

HomSet enumerate_homs(const SiteConfig& cfg, int n, int m, const EnumOptions& opts) {
  cfg.validate();
  if (n < 0 || m < 0 || opts.slack < 0) throw std::invalid_argument("enumerate_homs: bad arguments");
  const int cap = std::max(n, m) + opts.slack;
  auto cl = cached_closure(cfg, n, cap, opts.max_maps);

  HomSet out{cfg, n, m, materialize(*cl, m), false, ""};
  if (!cfg.diagonals) {
    out.complete_flag = true;
    return out;
  }
  if (!opts.probe_completeness) {
    out.note = "completeness not probed";
    return out;
  }
  if (cl->total > opts.probe_limit) {
    out.note = "completeness probe skipped (closure holds " + std::to_string(cl->total) + " maps)";
    return out;
  }
  try {
    auto probe = cached_closure(cfg, n, cap + 1, opts.max_maps);
    out.complete_flag = probe->order[m].size() == cl->order[m].size();
    if (!out.complete_flag) out.note = "one extra level reaches new maps";
  } catch (const ResourceBoundError&) {
    out.note = "completeness probe exceeded the resource bound";
  }
  return out;
}

OracleAgreement oracle_agreement(const SiteConfig& cfg, int n, int m, int slack) {
  cfg.validate();
  const std::size_t points = std::size_t{1} << n;
  if (m * points > 24) throw ResourceBoundError("oracle_agreement: function space too large");

  const int cap = std::max(n, m) + slack;
  auto cl = cached_closure(cfg, n, cap, EnumOptions{}.max_maps);

  OracleAgreement r;
  r.closure_count = cl->order[m].size();

  // every closure map must pass the membership decision
  {
    std::vector<std::uint16_t> t(points);
    for (Key k : cl->order[m]) {
      unpack_table(k, t.data(), points, cl->width);
      if (!is_member_table(cfg, n, m, t.data())) {
        r.witness = CubeMap(n, m, t);
        r.agree = false;
        return r;
      }
    }
  }

  // Sweep all (2^m)^(2^n) functions, counting members and checking each is
  // reached by the closure. Components of a member are members, so each
  // output vector is filtered through the single-output decision up front;
  // for non-diagonal sites dependency disjointness prunes across outputs.
  const std::uint64_t vec_top = 1ull << points;
  std::vector<std::uint64_t> admissible;
  std::vector<VarSet> dep_of(vec_top, 0);
  {
    std::vector<std::uint16_t> t(points);
    for (std::uint64_t b = 0; b < vec_top; ++b) {
      for (std::size_t v = 0; v < points; ++v) t[v] = static_cast<std::uint16_t>((b >> v) & 1);
      if (is_member_table(cfg, n, 1, t.data())) {
        admissible.push_back(b);
        dep_of[b] = truth_dependency(b, n);
      }
    }
  }

  std::vector<std::uint16_t> table(points);
  std::vector<std::uint64_t> outs(std::max(m, 1), 0);
  std::size_t members = 0;
  const bool prune_disjoint = !cfg.diagonals;

  auto visit = [&](auto&& self, int i, VarSet used) -> bool {  // false on witness
    if (i == m) {
      for (std::size_t v = 0; v < points; ++v) {
        std::uint16_t x = 0;
        for (int o = 0; o < m; ++o) x |= static_cast<std::uint16_t>(((outs[o] >> v) & 1) << o);
        table[v] = x;
      }
      if (!is_member_table(cfg, n, m, table.data())) return true;
      ++members;
      if (!cl->contains(m, pack_table(table.data(), points, cl->width))) {
        r.witness = CubeMap(n, m, table);
        return false;
      }
      return true;
    }
    for (std::uint64_t b : admissible) {
      if (prune_disjoint && (dep_of[b] & used)) continue;
      outs[i] = b;
      if (!self(self, i + 1, used | dep_of[b])) return false;
    }
    return true;
  };
  const bool clean = visit(visit, 0, 0);
  r.member_count = members;
  r.agree = clean && !r.witness && members == r.closure_count;
  return r;
}

std::vector<CubeMap> homs_by_membership(const SiteConfig& cfg, int n, int m) {
  cfg.validate();
  const std::size_t points = std::size_t{1} << n;
  if (m * points > 24) throw ResourceBoundError("homs_by_membership: function space too large");
  std::vector<CubeMap> out;
  std::vector<std::uint16_t> table(points);
  const std::uint64_t top = m * points >= 64 ? 0 : (1ull << (m * points));
  const std::uint16_t entry_mask = static_cast<std::uint16_t>((1u << m) - 1);
  for (std::uint64_t c = 0; c < top; ++c) {
    for (std::size_t v = 0; v < points; ++v)
      table[v] = static_cast<std::uint16_t>((c >> (v * m)) & entry_mask);
    if (is_member_table(cfg, n, m, table.data())) {
      out.emplace_back(n, m, table);
      if (out.size() > 2'000'000) throw ResourceBoundError("homs_by_membership: too many maps");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void IndexedHoms::rebuild_index() {
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  index.clear();
  surjective.assign(maps.size(), 0);
  injective.assign(maps.size(), 0);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    index.emplace(maps[i], static_cast<int>(i));
    const auto tr = classify_map(maps[i]);
    surjective[i] = tr.surjective;
    injective[i] = tr.injective;
  }
}

HomTable::HomTable(const SiteConfig& cfg, int max_dim) : cfg_(cfg), max_dim_(max_dim) {
  cfg.validate();
  if (max_dim < 0) throw std::invalid_argument("HomTable: bad dimension");
  homs_.resize(std::size_t(max_dim + 1) * (max_dim + 1));
  isos_.resize(max_dim + 1);
  for (int n = 0; n <= max_dim; ++n) {
    if (!cfg.diagonals) {
      auto cl = cached_closure(cfg, n, max_dim, EnumOptions{}.max_maps);
      for (int m = 0; m <= max_dim; ++m) {
        auto& slot = homs_[std::size_t(n) * (max_dim + 1) + m];
        slot.maps = materialize(*cl, m);
        slot.rebuild_index();
      }
    } else {
      for (int m = 0; m <= max_dim; ++m) {
        auto& slot = homs_[std::size_t(n) * (max_dim + 1) + m];
        slot.maps = homs_by_membership(cfg, n, m);
        slot.rebuild_index();
      }
    }
    isos_[n] = iso_group(cfg, n);
  }
}

const IndexedHoms& HomTable::at(int n, int m) const {
  if (n < 0 || m < 0 || n > max_dim_ || m > max_dim_)
    throw std::invalid_argument("HomTable::at: dimension out of range");
  return homs_[std::size_t(n) * (max_dim_ + 1) + m];
}

int HomTable::compose_index(const CubeMap& g, const CubeMap& f) const {
  return at(f.dom(), g.cod()).find(compose(g, f));
}

void HomTable::mutate(int n, int m, const std::function<void(std::vector<CubeMap>&)>& fn) {
  auto& slot = homs_[std::size_t(n) * (max_dim_ + 1) + m];
  fn(slot.maps);
  slot.rebuild_index();
}

}  // namespace cubeforge
