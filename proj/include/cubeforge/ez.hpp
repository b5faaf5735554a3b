#pragma once

#include <optional>

#include "cubeforge/report.hpp"
#include "cubeforge/sites.hpp"

namespace cubeforge {

/**
 * The set-level pushout Hom(□ᵏ,b) ⊔_{Hom(□ᵏ,a)} Hom(□ᵏ,c) of a span
 * f: a→b, g: a→c, as equivalence classes of tagged maps. Classes are
 * numbered in lexicographic order of their minimal representative
 * (b-side maps order before c-side maps).
 */
struct LevelwisePushout {
  int level = 0;
  int n_classes = 0;
  std::vector<int> class_of_b, class_of_c;     // hom-set index → class id
  std::vector<std::pair<int, int>> reps;       // class id → (side 0/1, hom index)
};

LevelwisePushout levelwise_pushout(const HomTable& homs, const CubeMap& f, const CubeMap& g,
                                   int k);

/**
 * A cocone (d, leg_b: b→d, leg_c: c→d) on the span (f, g) with commuting
 * square, where the induced map from the level-k pushout of hom-sets to
 * Hom(□ᵏ, d) is a bijection for every k ≤ verified_levels. That bijection
 * simultaneously certifies pushout-ness and preservation by the hom functors
 * up to the checked level; universal_ok additionally records a direct
 * universality check against every cocone vertex of dimension ≤ the level
 * bound.
 */
struct PushoutCertificate {
  CubeMap f, g;
  int vertex_dim = 0;
  CubeMap leg_b, leg_c;
  int verified_levels = 0;
  bool levelwise_ok = false;
  bool universal_ok = false;
  bool legs_minus = false;  // both legs surjective site maps
};

/// Searches cocone vertices of dimension ≤ min(dim b, dim c), descending,
/// with surjective legs; leg_c is forced by commutativity. Returns the first
/// candidate passing every level ≤ K, or none.
std::optional<PushoutCertificate> find_absolute_pushout(const HomTable& homs, const CubeMap& f,
                                                        const CubeMap& g, int K);

/// Certifies an absolute pushout for every unordered pair of degeneracies
/// with common domain of dimension ≤ N, to level K. Also checks both cocone
/// legs stay in the degeneracy class and admit sections.
CheckReport ez_category_check(const HomTable& homs, int N, int K, int jobs = 0);

}  // namespace cubeforge
