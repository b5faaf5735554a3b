#pragma once

#include <optional>

#include "cubeforge/order.hpp"
#include "cubeforge/report.hpp"
#include "cubeforge/sites.hpp"

namespace cubeforge {

enum class MapClass { all, monotone, meet_preserving, join_preserving };

/// Exhaustive filtered enumeration of functions P → Q, as index vectors.
std::vector<std::vector<int>> enumerate_maps(const FinLattice& p, const FinLattice& q,
                                             MapClass cls);

struct DiagonalIdentification {
  SiteConfig cfg;
  int n = 0, m = 0;
  bool equal = false;
  std::size_t closure_count = 0;
  std::size_t characterization_count = 0;
  bool closure_complete = false;
  std::string note;
  std::optional<CubeMap> witness;  // map present on exactly one side
};

/**
 * Compares the generator closure of Hom(□ⁿ,□ᵐ) in a diagonal site against
 * the site's order-theoretic description: maps with literal-or-constant
 * coordinates (no connections), binary-meet/join-preserving maps (one
 * connection), monotone maps (both connections), all maps (both connections
 * and reversals).
 */
DiagonalIdentification identify_diagonal_site(const SiteConfig& cfg, int n, int m, int slack = 2);

/// First idempotent on some □ⁿ (n ≤ N) in the site that splits through no
/// □ᵏ, k ≤ N; none when every idempotent splits.
std::optional<CubeMap> find_nonsplit_idempotent(const SiteConfig& cfg, int N);

struct KaroubiReport {
  CheckReport report;
  std::vector<FinPoset> image_classes;  // induced orders of idempotent images, up to iso
};

/**
 * Classifies the images of all idempotent endomaps of □ⁿ (n ≤ N) up to
 * order isomorphism and checks them against the expected family (lattices,
 * distributive lattices, or plain nonempty sets, per site). Conversely,
 * realizes every member of the family of size ≤ realize_bound as an
 * idempotent image via adjoint retractions.
 */
KaroubiReport karoubi_images(const SiteConfig& cfg, int N, int realize_bound);

/// The fence y₁ > p < x > q < y₂ on five points.
FinPoset fence_poset();

/// The five-element pentagon lattice (non-distributive, non-modular).
FinLattice pentagon_lattice();

enum class Ambient { monotone_lattices, meet_preserving_distributive };

struct ObstructionResult {
  bool factorization_exists = false;
  int forced_size = 0;      // any split-epi/mono intermediate has this size
  int candidates = 0;       // transported orders examined
  std::string detail;
  std::string witness;      // set when a factorization was found
};

/**
 * Decides whether h: D → E admits a factorization (split epi) ∘ (injective)
 * inside the ambient category. Any such intermediate is carried bijectively
 * onto im(h), with transported order squeezed between the push-forward of
 * D's relations and the order induced from E; the (finitely many) orders in
 * that sandwich are enumerated and checked for objecthood and a section.
 * The result therefore covers every intermediate size, with `bound` recorded
 * against the forced size for the bounded claim.
 */
ObstructionResult split_mono_obstruction(const FinLattice& d, const FinLattice& e,
                                         const std::vector<int>& h, Ambient ambient, int bound);

/**
 * The two concrete non-factorization constructions plus the non-lattice
 * quotient witness:
 *  (a) the quotient P of the downset lattice of the fence, identifying the
 *      two peaks, is not a lattice (explicit pair with no least upper bound);
 *  (b) the composite 2^fence → P → 2^P has no split-epi/mono factorization
 *      through a lattice of size ≤ monotone_bound under monotone maps;
 *  (c) a meet-surjection from a Boolean algebra onto the pentagon, followed
 *      by its downset embedding, has no split-epi/mono factorization through
 *      a distributive lattice of size ≤ meet_bound under meet-preserving
 *      maps.
 */
CheckReport factorization_obstructions_check(int monotone_bound, int meet_bound);

}  // namespace cubeforge
