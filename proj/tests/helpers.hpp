#pragma once

#include <random>

#include "cubeforge/sites.hpp"
#include "cubeforge/words.hpp"

namespace cubeforge::testing {

/// A random composite of site atoms out of □^dom, staying below dim_cap.
inline GeneratorWord random_word(const SiteConfig& cfg, int dom, int length, int dim_cap,
                                 std::mt19937& rng) {
  GeneratorWord w{dom, {}};
  int dim = dom;
  for (int i = 0; i < length; ++i) {
    auto atoms = atoms_from(cfg, dim, dim_cap);
    if (atoms.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    const auto atom = atoms[pick(rng)];
    w.levels.push_back(atom);
    dim += atom.dim_delta();
  }
  return w;
}

/// Monotone Boolean functions of n variables, counted as up-closed subsets
/// of the Boolean lattice. Independent of both the closure and the
/// membership decision.
inline std::size_t monotone_function_count(int n) {
  const std::size_t points = std::size_t{1} << n;
  std::size_t count = 0;
  for (std::uint64_t up = 0; up < (1ull << points); ++up) {
    bool upset = true;
    for (std::size_t v = 0; v < points && upset; ++v)
      if (up & (1ull << v))
        for (std::size_t w = 0; w < points && upset; ++w)
          if ((v & ~w) == 0 && !(up & (1ull << w))) upset = false;
    if (upset) ++count;
  }
  return count;
}

inline CubeMap eval(const SiteConfig& cfg, const std::string& text, int dom) {
  (void)cfg;
  return evaluate(parse_word(text, dom));
}

}  // namespace cubeforge::testing
