#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cubeforge/cube.hpp"
#include "cubeforge/site_config.hpp"

namespace cubeforge {

/**
 * Elementary generators, each a ±1- or 0-dimension step at an ambient
 * dimension n (slot indices are 1-based):
 *
 *   face  "d<i>+"/"d<i>-"  insert constant 1/0 at slot i        □ⁿ → □ⁿ⁺¹
 *   proj  "p<i>"           delete coordinate i                  □ⁿ → □ⁿ⁻¹
 *   meet  "m<i>"           merge coordinates i, i+1 by AND      □ⁿ → □ⁿ⁻¹
 *   join  "j<i>"           merge coordinates i, i+1 by OR       □ⁿ → □ⁿ⁻¹
 *   sym   "x<i>"           swap coordinates i, i+1              □ⁿ → □ⁿ
 *   rev   "r<i>"           negate coordinate i                  □ⁿ → □ⁿ
 *   diag  "c<i>"           copy coordinate i into slot i+1      □ⁿ → □ⁿ⁺¹
 */
enum class AtomKind { face, proj, meet, join, sym, rev, diag };

struct GeneratorAtom {
  AtomKind kind;
  int slot = 1;
  int eps = -1;  // face only: 0 or 1

  int dim_delta() const;
  std::string token() const;
  friend bool operator==(const GeneratorAtom&, const GeneratorAtom&) = default;
};

/// The elementary map of `atom` applied at ambient dimension dom_dim.
/// Throws std::invalid_argument when the slot does not fit.
CubeMap atom_map(const GeneratorAtom& atom, int dom_dim);

/// A composite of atoms. levels are applied left to right: levels[0] acts on
/// □^dom_dim first. (The text grammar reads right to left, "g . f" = g∘f.)
struct GeneratorWord {
  int dom_dim = 0;
  std::vector<GeneratorAtom> levels;
  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

struct WordParseError : std::runtime_error {
  WordParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position(position) {}
  std::size_t position;
};

/// Grammar: word ::= "1" | atom (" . " atom)*, whitespace insignificant.
GeneratorWord parse_word(std::string_view text, int dom_dim);
std::string print_word(const GeneratorWord& w);

CubeMap evaluate(const GeneratorWord& w);

/// All single-atom maps □ⁿ → □ᵐ permitted by cfg; requires |n − m| ≤ 1.
/// The identity is not an atom and is never included.
std::vector<CubeMap> generators_between(const SiteConfig& cfg, int n, int m);

/// The atoms out of dimension n permitted by cfg whose codomain is ≤ cap.
std::vector<GeneratorAtom> atoms_from(const SiteConfig& cfg, int n, int cap);

bool atom_allowed(const SiteConfig& cfg, AtomKind kind);

}  // namespace cubeforge
