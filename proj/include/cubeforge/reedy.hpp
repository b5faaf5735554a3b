#pragma once

#include <optional>

#include "cubeforge/report.hpp"
#include "cubeforge/sites.hpp"

namespace cubeforge {

enum class MorphismClass { minus, plus, iso, mixed };

const char* morphism_class_str(MorphismClass c);

/**
 * Degeneracy/face classification for non-diagonal sites: a site morphism is
 * in the degeneracy class iff surjective, in the face class iff injective,
 * iso iff bijective, mixed otherwise. (In f = i∘q, surjectivity forces i
 * invertible and injectivity forces q invertible.)
 * Throws std::invalid_argument on non-members or diagonal sites.
 */
MorphismClass classify(const SiteConfig& cfg, const CubeMap& f);

struct Factorization {
  CubeMap q;  // surjective part (degeneracy class)
  CubeMap i;  // injective part (face class)
};

/// Surjective-then-injective factorization through the image face subcube:
/// q deletes the constant output coordinates of f, i is the face inclusion
/// putting them back. Throws on non-members; a non-subcube image indicates a
/// membership bug and raises std::logic_error.
Factorization factorize(const SiteConfig& cfg, const CubeMap& f);

/// First section of f in the site under lexicographic table order, or none.
std::optional<CubeMap> find_section(const SiteConfig& cfg, const CubeMap& f);
std::optional<CubeMap> find_section(const HomTable& homs, const CubeMap& f);

/**
 * Sweeps every site morphism with endpoints of dimension ≤ N and verifies the
 * generalized Reedy axioms: a surjective/injective factorization exists, any
 * two factorizations differ by a unique intermediate site isomorphism,
 * non-invertible surjective members strictly lower dimension, non-invertible
 * injective members strictly raise it, and both classes are closed under
 * composition.
 */
CheckReport verify_reedy_axioms(const HomTable& homs, int N);

/// Idempotent splitting: every idempotent e on □ⁿ (n ≤ N) must admit r, s in
/// the site with s∘r = e and r∘s = id. For diagonal sites the report lists
/// the non-split idempotents as witnesses instead of failing the run.
CheckReport verify_idempotents_split(const HomTable& homs, int N);

/// For every morphism with endpoints ≤ N, the three split-epi readings must
/// coincide: has a section in the site ⟺ surjective ⟺ post-composition
/// into Hom(□ᵏ,−) is surjective for all k ≤ N. Also checks, on one certified
/// pushout square, that the cobase change of a split epi keeps a section.
CheckReport split_epi_equivalences_check(const HomTable& homs, int N);

/// Face-class maps are monomorphisms: f∘u = f∘v forces u = v, exhaustively
/// over test objects of dimension ≤ N.
CheckReport plus_maps_are_monos_check(const HomTable& homs, int N);

}  // namespace cubeforge
