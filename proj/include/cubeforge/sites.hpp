#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cubeforge/cube.hpp"
#include "cubeforge/site_config.hpp"
#include "cubeforge/words.hpp"

namespace cubeforge {

struct ResourceBoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HomSet {
  SiteConfig cfg;
  int n = 0;
  int m = 0;
  std::vector<CubeMap> maps;  // lexicographically sorted
  bool complete_flag = false;
  std::string note;  // set when completeness could not be probed
};

struct EnumOptions {
  int slack = 0;
  std::size_t max_maps = 12'000'000;   // total maps stored across all reach sets
  bool probe_completeness = true;      // diagonal sites: try one extra level
  std::size_t probe_limit = 200'000;   // skip the probe above this base size
};
// Saturated closures are cached per (site, domain, dimension cap) and reused
// by later calls regardless of their budget; max_maps only bounds fresh runs.

/**
 * Generator-closure enumeration of Hom(□ⁿ, □ᵐ): saturate, by single-atom
 * post-composition starting from the identity of □ⁿ, the sets of reachable
 * maps out of □ⁿ through objects of dimension ≤ max(n,m)+slack, and return
 * the (n,m) slice.
 *
 * For non-diagonal sites slack 0 already saturates (every morphism factors
 * through dimensions between min and max of its endpoints), so complete_flag
 * is always true there. For diagonal sites completeness at a fixed slack is
 * empirical: the probe re-runs with one extra level and compares.
 *
 * Throws ResourceBoundError when the closure exceeds opts.max_maps.
 */
HomSet enumerate_homs(const SiteConfig& cfg, int n, int m, int slack);
HomSet enumerate_homs(const SiteConfig& cfg, int n, int m, const EnumOptions& opts);

/**
 * Structural membership decision, independent of the closure.
 *
 * Non-diagonal sites: output dependency sets must be pairwise disjoint, each
 * non-constant coordinate function must be a read-once formula over its
 * variables in the clone the site admits (literals; pure meets; pure joins;
 * {∧,∨} over positive literals; {∧,∨} over literals), and without symmetries
 * the dependency blocks must be ordered intervals with an in-order formula
 * layout. Diagonal sites use the order-theoretic characterizations: literal
 * or constant coordinates (d,s / d,s,r), binary-meet- or binary-join-
 * preserving maps (one connection), monotone maps (both connections), all
 * maps (both connections and reversals).
 */
bool is_member(const SiteConfig& cfg, const CubeMap& f);

/// Raw-table variant used by exhaustive sweeps (no CubeMap construction).
bool is_member_table(const SiteConfig& cfg, int n, int m, const std::uint16_t* table);

/// All isomorphisms □ⁿ → □ⁿ generated by the site's symmetry and reversal
/// generators: {id}, permutations, coordinate reversals, or signed
/// permutations. Sorted lexicographically.
std::vector<CubeMap> iso_group(const SiteConfig& cfg, int n);

/// Rebuild f as a word: faces ∘ connections ∘ symmetries ∘ reversals ∘
/// projections, every atom permitted by cfg. Empty for non-members.
/// Only defined for non-diagonal sites.
std::optional<GeneratorWord> structured_word(const SiteConfig& cfg, const CubeMap& f);

struct OracleAgreement {
  bool agree = false;
  std::size_t member_count = 0;
  std::size_t closure_count = 0;
  std::optional<CubeMap> witness;  // a map on which the two routes disagree
};

/// Compares is_member against the closure over all (2^m)^(2^n) functions.
OracleAgreement oracle_agreement(const SiteConfig& cfg, int n, int m, int slack);

/// Exhaustive enumeration of Hom(□ⁿ,□ᵐ) by filtering every function through
/// is_member. Authoritative for diagonal sites; guarded by a size cap.
std::vector<CubeMap> homs_by_membership(const SiteConfig& cfg, int n, int m);

/// A hom-set with an index for O(1) composition lookups.
struct IndexedHoms {
  std::vector<CubeMap> maps;  // lexicographically sorted
  std::unordered_map<CubeMap, int, CubeMapHash> index;
  std::vector<char> surjective, injective;

  int find(const CubeMap& f) const {
    auto it = index.find(f);
    return it == index.end() ? -1 : it->second;
  }
  std::size_t size() const { return maps.size(); }
  void rebuild_index();
};

/**
 * Immutable table of all hom-sets between dimensions ≤ max_dim, plus the iso
 * groups. Safe to share across threads once built. mutate() exists so tests
 * can corrupt a copy for fault-injection; verified code never calls it.
 */
class HomTable {
 public:
  HomTable(const SiteConfig& cfg, int max_dim);

  const SiteConfig& config() const { return cfg_; }
  int max_dim() const { return max_dim_; }
  const IndexedHoms& at(int n, int m) const;
  const std::vector<CubeMap>& isos(int n) const { return isos_.at(n); }

  /// Index of g∘f in at(f.dom(), g.cod()); -1 when the composite is missing.
  int compose_index(const CubeMap& g, const CubeMap& f) const;

  void mutate(int n, int m, const std::function<void(std::vector<CubeMap>&)>& fn);

 private:
  SiteConfig cfg_;
  int max_dim_;
  std::vector<IndexedHoms> homs_;  // (max_dim+1)^2 slots
  std::vector<std::vector<CubeMap>> isos_;
};

}  // namespace cubeforge
