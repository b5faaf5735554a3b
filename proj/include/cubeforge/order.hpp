#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cubeforge {

/**
 * A finite poset on elements 0..size-1. leq is the full reflexive relation
 * matrix; construction validates reflexivity, transitivity and antisymmetry.
 */
struct FinPoset {
  int size = 0;
  std::vector<std::string> names;          // optional, defaults to indices
  std::vector<std::vector<char>> leq;

  static FinPoset from_relation(int size, std::vector<std::vector<char>> leq,
                                std::vector<std::string> names = {});
  /// { "elements": [...], "leq": [[a,b], ...] }; the relation is closed
  /// reflexively and transitively, then checked for antisymmetry.
  static FinPoset from_json(const nlohmann::json& j);

  bool le(int a, int b) const { return leq[a][b]; }
  std::string name_of(int a) const { return names.empty() ? std::to_string(a) : names[a]; }
};

/// A lattice: poset in which every pair has a meet and a join.
struct FinLattice {
  FinPoset poset;
  std::vector<std::vector<int>> meet, join;

  int size() const { return poset.size; }
  bool le(int a, int b) const { return poset.le(a, b); }

  static std::optional<FinLattice> from_poset(const FinPoset& p);
  bool distributive() const;
};

/// The Boolean lattice 2ⁿ on vertex bitmasks.
FinLattice boolean_lattice(int n);

/// Down-closed subsets of P ordered by inclusion; `embedding`, when given,
/// receives the principal-downset embedding P → 2^P.
FinLattice downset_lattice(const FinPoset& p, std::vector<int>* embedding = nullptr);

/// Quotient of a poset by identifying element groups, with the order
/// generated by images of relations; throws when antisymmetry breaks.
FinPoset quotient_poset(const FinPoset& p, const std::vector<std::vector<int>>& identify);

/// Canonical form of the relation matrix under relabeling; equal strings
/// iff order-isomorphic. Intended for sizes ≤ 8.
std::string canonical_form(const FinPoset& p);
bool order_isomorphic(const FinPoset& a, const FinPoset& b);

/// The subposet induced on `elements`.
FinPoset induced_subposet(const FinPoset& p, const std::vector<int>& elements);

/// All posets (up to iso) with exactly `size` elements. size ≤ 6.
std::vector<FinPoset> all_posets_of_size(int size);

/// All lattices (up to iso) with exactly `size` elements. size ≤ 6.
std::vector<FinLattice> all_lattices_of_size(int size);

/// Join-irreducible elements (exactly one lower cover), the poset Birkhoff
/// reconstruction works from.
FinPoset join_irreducibles(const FinLattice& l);

}  // namespace cubeforge
