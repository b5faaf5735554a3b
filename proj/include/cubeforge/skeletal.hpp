#pragma once

#include "cubeforge/report.hpp"
#include "cubeforge/sites.hpp"

namespace cubeforge {

/**
 * Partition of the inputs of a degeneracy by the unique output they feed,
 * plus the trivial part feeding no output. parts[i] is the variable set of
 * output i+1 (0 for constant outputs).
 */
struct DependencyPartition {
  std::vector<VarSet> parts;
  VarSet trivial = 0;
};

/// Requires a surjective member of a non-diagonal site; raises
/// std::logic_error if the dependency sets fail to be pairwise disjoint.
DependencyPartition dependency_partition(const SiteConfig& cfg, const CubeMap& p);

/// All ι: □ᵐ → □ⁿ in the site with p∘ι invertible, for a degeneracy
/// p: □ⁿ → □ᵐ. Only injective maps of the matching dimension can qualify,
/// so the scan is restricted to them. Sorted lexicographically.
std::vector<CubeMap> pseudo_sections(const HomTable& homs, const CubeMap& p);

/// True iff some site isomorphism φ of the codomain has φ∘p = p'.
bool is_pseudo_equal(const SiteConfig& cfg, const CubeMap& p, const CubeMap& p2);

/**
 * Strong skeletality sweep: every degeneracy out of □ⁿ (n ≤ N) splits, and
 * any two with identical pseudo-section sets are pseudo-equal.
 */
CheckReport strong_skeletality_check(const HomTable& homs, int N);

/**
 * Exhaustive laws tying pseudo-sections to dependency partitions, for every
 * degeneracy with endpoints ≤ N:
 *   - a section's non-constant output pattern lines up with the dependency
 *     sets, output by output;
 *   - no pseudo-section is non-constant in two codependent directions;
 *   - every pseudo-section is constant in the trivial directions;
 *   - every nontrivial direction is realized by some pseudo-section;
 *   - equal pseudo-section sets force equal unordered partitions and equal
 *     trivial parts;
 *   - without symmetries, the nontrivial parts are intervals ordered by
 *     output index.
 */
CheckReport pseudo_section_laws(const HomTable& homs, int N);

}  // namespace cubeforge
