#pragma once

#include <string>

#include "json.hpp"

#include "cubeforge/report.hpp"
#include "cubeforge/sites.hpp"

namespace cubeforge {

struct FunctorialityError : std::runtime_error {
  FunctorialityError(const std::string& msg, std::string word_a, std::string word_b)
      : std::runtime_error(msg), word_a(std::move(word_a)), word_b(std::move(word_b)) {}
  std::string word_a, word_b;  // two words for the same map whose actions differ
};

/**
 * A finite presheaf fragment: cells up to a truncation dimension plus the
 * contravariant actions of the site's elementary generators.
 *
 * File format (JSON):
 *   {
 *     "site": "<site spec or alias>",
 *     "trunc": N,
 *     "cells": { "0": [ids], "1": [ids], ... },
 *     "actions": { "<atom token>@<k>": { "<cell id>": "<cell id>", ... }, ... }
 *   }
 *
 * The key "t@k" names the atom with token t whose domain is □ᵏ. An atom
 * a: □ᵏ → □ᵏ' acts contravariantly, so its JSON object maps each cell of
 * dimension k' to a cell of dimension k ("p1@2" sends 1-cells to their
 * degenerate 2-cells). Every atom the site admits between dimensions ≤ N
 * must be present.
 *
 * Loading validates functoriality: whenever two generator words through
 * dimensions ≤ N evaluate to the same map of cubes, their induced actions
 * must agree. Violations raise FunctorialityError with a witness word pair.
 */
class TruncatedCubicalSet {
 public:
  static TruncatedCubicalSet load(const nlohmann::json& j);
  static TruncatedCubicalSet load_file(const std::string& path);

  const SiteConfig& config() const { return cfg_; }
  int trunc() const { return trunc_; }
  const std::vector<std::string>& cells(int dim) const { return cells_.at(dim); }
  int cell_index(int dim, const std::string& id) const;

  /// Contravariant action of a site morphism f: □ʲ → □ᵏ as an index vector
  /// cells(k) → cells(j). Throws for maps outside the validated table.
  const std::vector<int>& action(const CubeMap& f) const;

  const HomTable& homs() const { return *homs_; }
  bool nondegenerate(int dim, int cell) const { return !degenerate_.at(dim).at(cell); }

 private:
  TruncatedCubicalSet() = default;
  void validate_functoriality();
  void compute_degeneracies();

  SiteConfig cfg_;
  int trunc_ = 0;
  std::vector<std::vector<std::string>> cells_;
  std::shared_ptr<const HomTable> homs_;
  // per (j,k): per hom index, the action vector cells(k) -> cells(j)
  std::vector<std::vector<std::vector<std::vector<int>>>> actions_;
  std::vector<std::vector<std::string>> words_;  // a witness word per morphism
  std::vector<std::vector<char>> degenerate_;
};

struct EZDecomposition {
  CubeMap degeneracy;   // q: □ᵏ → □ʲ, surjective
  int cell_dim = 0;     // j
  int cell = 0;         // index of the nondegenerate cell y with A(q)(y) = x
  std::string cell_id;
};

/// First (q, y) in the fixed search order — degeneracy target dimension
/// ascending, then maps in lexicographic order, then cells in file order —
/// with y nondegenerate and A(q)(y) = x.
EZDecomposition ez_decompose(const TruncatedCubicalSet& X, int k, const std::string& cell_id);

/**
 * Enumerates, for every cell, ALL decompositions through a nondegenerate
 * cell and verifies each pair is related by exactly one site isomorphism
 * compatible with both the degeneracies and the cells. Also verifies that
 * every minimal-dimension factorization lands on a nondegenerate cell.
 * Requires a non-diagonal site.
 */
CheckReport ez_uniqueness_check(const TruncatedCubicalSet& X);

/// The representable presheaf of □ⁿ truncated at `trunc`, as fixture JSON.
nlohmann::json representable_fixture(const SiteConfig& cfg, int n, int trunc);

/// Quotient of the representable of □ⁿ identifying all cells that factor
/// through □⁰ (one collapsed cell per dimension).
nlohmann::json collapsed_vertex_fixture(const SiteConfig& cfg, int n, int trunc);

}  // namespace cubeforge
