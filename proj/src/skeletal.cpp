#include "cubeforge/skeletal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <bit>

#include "cubeforge/reedy.hpp"

namespace cubeforge {

DependencyPartition dependency_partition(const SiteConfig& cfg, const CubeMap& p) {
  if (classify(cfg, p) != MorphismClass::minus && classify(cfg, p) != MorphismClass::iso)
    throw std::invalid_argument("dependency_partition: not a degeneracy");
  const auto d = dependency(p);
  VarSet used = 0;
  for (const auto s : d.by_output) {
    if (s & used)
      throw std::logic_error("dependency_partition: overlapping dependency sets (membership bug)");
    used |= s;
  }
  return DependencyPartition{d.by_output, d.trivial};
}

std::vector<CubeMap> pseudo_sections(const HomTable& homs, const CubeMap& p) {
  if (!classify_map(p).surjective)
    throw std::invalid_argument("pseudo_sections: not a degeneracy");
  const auto& candidates = homs.at(p.cod(), p.dom());
  std::vector<CubeMap> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!candidates.injective[i]) continue;
    if (classify_map(compose(p, candidates.maps[i])).iso) out.push_back(candidates.maps[i]);
  }
  return out;  // candidates are sorted, so out is too
}

bool is_pseudo_equal(const SiteConfig& cfg, const CubeMap& p, const CubeMap& p2) {
  if (p.dom() != p2.dom()) throw std::invalid_argument("is_pseudo_equal: domains differ");
  if (p.cod() != p2.cod()) return false;
  for (const auto& phi : iso_group(cfg, p.cod()))
    if (compose(phi, p) == p2) return true;
  return false;
}

namespace {

std::vector<CubeMap> degeneracies_out_of(const HomTable& homs, int n) {
  std::vector<CubeMap> out;
  for (int m = 0; m <= n; ++m) {
    const auto& hs = homs.at(n, m);
    for (std::size_t i = 0; i < hs.size(); ++i)
      if (hs.surjective[i]) out.push_back(hs.maps[i]);
  }
  return out;
}

std::uint16_t nonconstant_outputs(const CubeMap& f) {
  std::uint16_t vary = 0;
  for (const auto v : f.table()) vary |= v ^ f.table()[0];
  return vary;
}

}  // namespace

CheckReport strong_skeletality_check(const HomTable& homs, int N) {
  CheckReport r{.name = "strong-skeletality"};
  const SiteConfig& cfg = homs.config();
  std::int64_t degeneracy_count = 0, pairs = 0;

  for (int n = 0; n <= N; ++n) {
    const auto degens = degeneracies_out_of(homs, n);
    degeneracy_count += static_cast<std::int64_t>(degens.size());

    std::vector<std::vector<CubeMap>> psets;
    psets.reserve(degens.size());
    for (const auto& p : degens) {
      if (!find_section(homs, p)) r.fail("degeneracy without a section: " + p.str());
      psets.push_back(pseudo_sections(homs, p));
    }
    for (std::size_t i = 0; i < degens.size(); ++i)
      for (std::size_t j = i + 1; j < degens.size(); ++j) {
        ++pairs;
        if (psets[i] != psets[j]) continue;
        if (!is_pseudo_equal(cfg, degens[i], degens[j]))
          r.fail("equal pseudo-section sets but not pseudo-equal: " + degens[i].str() + " , " +
                 degens[j].str());
      }
  }
  r.stats["degeneracies"] = degeneracy_count;
  r.stats["pairs"] = pairs;
  return r;
}

CheckReport pseudo_section_laws(const HomTable& homs, int N) {
  CheckReport r{.name = "pseudo-section-laws"};
  const SiteConfig& cfg = homs.config();
  std::int64_t degeneracy_count = 0;

  for (int n = 0; n <= N; ++n) {
    const auto degens = degeneracies_out_of(homs, n);
    std::vector<std::vector<CubeMap>> psets;
    std::vector<DependencyPartition> dps;
    for (const auto& p : degens) {
      ++degeneracy_count;
      dps.push_back(dependency_partition(cfg, p));
      psets.push_back(pseudo_sections(homs, p));
      const auto& dp = dps.back();
      const auto& ps = psets.back();
      const int m = p.cod();

      // Sections: input i of a section s occupies one output slot of s, and
      // output i of p must depend on exactly that slot among the non-constant
      // ones. Without symmetries the slots appear in ascending order, so the
      // alignment is the identity.
      const CubeMap id_m = CubeMap::identity(m);
      for (const auto& s : ps) {
        if (compose(p, s) != id_m) continue;
        const auto sdep = dependency(s);
        const std::uint16_t vary = nonconstant_outputs(s);
        std::vector<int> j_list;
        for (int j = 1; j <= n; ++j)
          if (vary & (1u << (j - 1))) j_list.push_back(j);
        if (static_cast<int>(j_list.size()) != m) {
          r.fail("section with unexpected non-constant pattern: " + s.str());
          continue;
        }
        for (int i = 1; i <= m; ++i) {
          int slot = 0;  // the output of s carrying its input i
          for (int j = 1; j <= n; ++j)
            if (sdep.by_output[j - 1] == (VarSet{1} << (i - 1))) slot = j;
          if (slot == 0) {
            r.fail("section input feeds no slot: " + s.str());
            continue;
          }
          VarSet j_mask = 0;
          for (const int j : j_list) j_mask |= VarSet{1} << (j - 1);
          if ((dp.parts[i - 1] & j_mask) != (VarSet{1} << (slot - 1)))
            r.fail("section direction misaligned with dependency at " + p.str() + " via " +
                   s.str());
          if (!cfg.symmetries && slot != j_list[i - 1])
            r.fail("section slots out of ascending order without symmetries at " + p.str());
        }
      }

      // pseudo-sections are constant on codependent pairs and trivial parts
      for (const auto& s : ps) {
        const std::uint16_t vary = nonconstant_outputs(s);
        for (const auto part : dp.parts)
          if (std::popcount(static_cast<std::uint32_t>(vary) & part) > 1)
            r.fail("pseudo-section non-constant twice inside one part: " + s.str() + " of " +
                   p.str());
        if (vary & dp.trivial)
          r.fail("pseudo-section non-constant in a trivial direction: " + s.str() + " of " +
                 p.str());
      }

      // every nontrivial direction is realized
      VarSet realized = 0;
      for (const auto& s : ps) realized |= nonconstant_outputs(s);
      VarSet nontrivial = 0;
      for (const auto part : dp.parts) nontrivial |= part;
      if ((nontrivial & ~realized) != 0)
        r.fail("nontrivial direction with no non-constant pseudo-section: " + p.str());

      // without symmetries: ordered interval blocks
      if (!cfg.symmetries) {
        int prev_max = 0;
        for (const auto part : dp.parts) {
          if (part == 0) continue;
          const int lo = std::countr_zero(part) + 1;
          const int hi = 32 - std::countl_zero(part);
          if (lo <= prev_max) r.fail("dependency blocks interleave without symmetries: " + p.str());
          prev_max = hi;
        }
      }
    }

    // equal pseudo-section sets determine the unordered partition
    for (std::size_t i = 0; i < degens.size(); ++i)
      for (std::size_t j = i + 1; j < degens.size(); ++j) {
        if (psets[i] != psets[j]) continue;
        auto unordered = [](const DependencyPartition& dp) {
          std::multiset<VarSet> s;
          for (const auto p : dp.parts)
            if (p) s.insert(p);
          return s;
        };
        if (unordered(dps[i]) != unordered(dps[j]) || dps[i].trivial != dps[j].trivial)
          r.fail("equal pseudo-section sets with different partitions: " + degens[i].str() +
                 " , " + degens[j].str());
      }
  }
  r.stats["degeneracies"] = degeneracy_count;
  return r;
}

}  // namespace cubeforge
