#include "cubeforge/reedy.hpp"

#include <algorithm>

#include "cubeforge/ez.hpp"

namespace cubeforge {

const char* morphism_class_str(MorphismClass c) {
  switch (c) {
    case MorphismClass::minus: return "minus";
    case MorphismClass::plus: return "plus";
    case MorphismClass::iso: return "iso";
    case MorphismClass::mixed: return "mixed";
  }
  return "?";
}

MorphismClass classify(const SiteConfig& cfg, const CubeMap& f) {
  if (cfg.diagonals)
    throw std::invalid_argument("classify: only defined for non-diagonal sites");
  if (!is_member(cfg, f)) throw std::invalid_argument("classify: not a site morphism");
  const auto t = classify_map(f);
  if (t.iso) return MorphismClass::iso;
  if (t.surjective) return MorphismClass::minus;
  if (t.injective) return MorphismClass::plus;
  return MorphismClass::mixed;
}

Factorization factorize(const SiteConfig& cfg, const CubeMap& f) {
  if (cfg.diagonals)
    throw std::invalid_argument("factorize: only defined for non-diagonal sites");
  if (!is_member(cfg, f)) throw std::invalid_argument("factorize: not a site morphism");

  const int n = f.dom(), m = f.cod();
  const std::size_t size = std::size_t{1} << n;

  // constant output coordinates and their values
  std::uint16_t vary = 0;
  for (std::size_t v = 0; v < size; ++v) vary |= f.table()[v] ^ f.table()[0];
  std::vector<int> free_outputs;
  for (int i = 0; i < m; ++i)
    if (vary & (1u << i)) free_outputs.push_back(i);
  const int k = static_cast<int>(free_outputs.size());

  std::vector<std::uint16_t> qt(size);
  for (std::size_t v = 0; v < size; ++v) {
    std::uint16_t w = 0;
    for (int t = 0; t < k; ++t) w |= static_cast<std::uint16_t>(((f.table()[v] >> free_outputs[t]) & 1) << t);
    qt[v] = w;
  }
  CubeMap q(n, k, std::move(qt));

  std::vector<std::uint16_t> it(std::size_t{1} << k);
  const std::uint16_t constants = static_cast<std::uint16_t>(f.table()[0] & ~vary);
  for (std::size_t w = 0; w < it.size(); ++w) {
    std::uint16_t x = constants;
    for (int t = 0; t < k; ++t) x |= static_cast<std::uint16_t>(((w >> t) & 1) << free_outputs[t]);
    it[w] = x;
  }
  CubeMap i(k, m, std::move(it));

  if (!classify_map(q).surjective)
    throw std::logic_error("factorize: image of " + f.str() +
                           " is not a face subcube (membership bug)");
  if (!is_member(cfg, q) || !is_member(cfg, i) || compose(i, q) != f)
    throw std::logic_error("factorize: invalid factorization of " + f.str() + " (membership bug)");
  return Factorization{std::move(q), std::move(i)};
}

namespace {

std::optional<CubeMap> first_section(const std::vector<CubeMap>& candidates, const CubeMap& f) {
  const CubeMap id = CubeMap::identity(f.cod());
  for (const auto& s : candidates)
    if (compose(f, s) == id) return s;
  return std::nullopt;
}

}  // namespace

std::optional<CubeMap> find_section(const SiteConfig& cfg, const CubeMap& f) {
  if (!is_member(cfg, f)) throw std::invalid_argument("find_section: not a site morphism");
  if (!classify_map(f).surjective) return std::nullopt;
  std::vector<CubeMap> candidates =
      cfg.diagonals ? homs_by_membership(cfg, f.cod(), f.dom())
                    : enumerate_homs(cfg, f.cod(), f.dom(), 0).maps;
  return first_section(candidates, f);
}

std::optional<CubeMap> find_section(const HomTable& homs, const CubeMap& f) {
  if (!classify_map(f).surjective) return std::nullopt;
  return first_section(homs.at(f.cod(), f.dom()).maps, f);
}

namespace {

struct Factored {
  int k;
  CubeMap q, i;
};

// all (q, i) with q surjective, i injective, both in the site, i∘q = f
std::vector<Factored> all_factorizations(const HomTable& homs, const CubeMap& f) {
  std::vector<Factored> out;
  const int n = f.dom(), m = f.cod();
  for (int k = 0; k <= std::min(n, m); ++k) {
    const auto& qs = homs.at(n, k);
    const auto& is = homs.at(k, m);
    std::vector<std::int32_t> derived(std::size_t{1} << k);
    for (std::size_t qi = 0; qi < qs.size(); ++qi) {
      if (!qs.surjective[qi]) continue;
      const auto& q = qs.maps[qi];
      std::fill(derived.begin(), derived.end(), -1);
      bool ok = true;
      for (std::size_t v = 0; v < q.table().size() && ok; ++v) {
        auto& slot = derived[q.table()[v]];
        if (slot == -1)
          slot = f.table()[v];
        else if (slot != f.table()[v])
          ok = false;
      }
      if (!ok) continue;
      std::vector<std::uint16_t> it(derived.begin(), derived.end());
      CubeMap i(k, m, std::move(it));
      const int ii = is.find(i);
      if (ii < 0 || !is.injective[ii]) continue;
      out.push_back(Factored{k, q, std::move(i)});
    }
  }
  return out;
}

// the unique function φ with φ∘q = q' (q surjective); empty if inconsistent
std::optional<CubeMap> transport_iso(const CubeMap& q, const CubeMap& q2) {
  std::vector<std::int32_t> t(std::size_t{1} << q.cod(), -1);
  for (std::size_t v = 0; v < q.table().size(); ++v) {
    auto& slot = t[q.table()[v]];
    if (slot == -1)
      slot = q2.table()[v];
    else if (slot != q2.table()[v])
      return std::nullopt;
  }
  std::vector<std::uint16_t> tt(t.begin(), t.end());
  return CubeMap(q.cod(), q2.cod(), std::move(tt));
}

}  // namespace

CheckReport verify_reedy_axioms(const HomTable& homs, int N) {
  CheckReport r{.name = "reedy-axioms"};
  std::int64_t morphisms = 0, factorizations = 0;

  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= N; ++m) {
      const auto& hs = homs.at(n, m);
      for (std::size_t fi = 0; fi < hs.size(); ++fi) {
        const auto& f = hs.maps[fi];
        ++morphisms;

        // strict degree monotonicity
        const bool iso = hs.surjective[fi] && hs.injective[fi] && n == m;
        if (hs.surjective[fi] && !iso && n <= m)
          r.fail("surjective non-iso does not lower dimension: " + f.str());
        if (hs.injective[fi] && !iso && n >= m)
          r.fail("injective non-iso does not raise dimension: " + f.str());

        auto facts = all_factorizations(homs, f);
        factorizations += static_cast<std::int64_t>(facts.size());
        if (facts.empty()) {
          r.fail("no surjective/injective factorization: " + f.str());
          continue;
        }
        for (std::size_t a = 0; a < facts.size(); ++a)
          for (std::size_t b = a + 1; b < facts.size(); ++b) {
            if (facts[a].k != facts[b].k) {
              r.fail("factorizations of " + f.str() + " through different dimensions");
              continue;
            }
            auto phi = transport_iso(facts[a].q, facts[b].q);
            const auto& isos = homs.isos(facts[a].k);
            const bool good = phi && std::binary_search(isos.begin(), isos.end(), *phi) &&
                              compose(facts[b].i, *phi) == facts[a].i;
            if (!good)
              r.fail("factorizations of " + f.str() + " not related by a unique site iso");
          }
      }
    }

  // both classes closed under composition
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= N; ++m)
      for (int k = 0; k <= N; ++k) {
        const auto& ab = homs.at(n, m);
        const auto& bc = homs.at(m, k);
        for (std::size_t i = 0; i < ab.size(); ++i)
          for (std::size_t j = 0; j < bc.size(); ++j) {
            const bool both_surj = ab.surjective[i] && bc.surjective[j];
            const bool both_inj = ab.injective[i] && bc.injective[j];
            if (!both_surj && !both_inj) continue;
            const auto gf = compose(bc.maps[j], ab.maps[i]);
            const int gi = homs.at(n, k).find(gf);
            if (gi < 0) {
              r.fail("composite leaves the site: " + bc.maps[j].str() + " after " + ab.maps[i].str());
              continue;
            }
            if (both_surj && !homs.at(n, k).surjective[gi])
              r.fail("surjective class not closed under composition at " + gf.str());
            if (both_inj && !homs.at(n, k).injective[gi])
              r.fail("injective class not closed under composition at " + gf.str());
          }
      }

  r.stats["morphisms"] = morphisms;
  r.stats["factorizations"] = factorizations;
  return r;
}

CheckReport verify_idempotents_split(const HomTable& homs, int N) {
  CheckReport r{.name = "idempotents-split"};
  const bool diagonal = homs.config().diagonals;
  std::int64_t idempotents = 0, nonsplit = 0;
  std::string first_nonsplit;

  for (int n = 0; n <= N; ++n) {
    const auto& hs = homs.at(n, n);
    for (const auto& e : hs.maps) {
      if (compose(e, e) != e) continue;
      ++idempotents;
      bool split = false;
      for (int k = 0; k <= n && !split; ++k) {
        const auto& rs = homs.at(n, k);
        const auto& ss = homs.at(k, n);
        std::vector<std::int32_t> derived(std::size_t{1} << k);
        for (std::size_t ri = 0; ri < rs.size() && !split; ++ri) {
          if (!rs.surjective[ri]) continue;
          const auto& rm = rs.maps[ri];
          std::fill(derived.begin(), derived.end(), -1);
          bool ok = true;
          for (std::size_t v = 0; v < rm.table().size() && ok; ++v) {
            auto& slot = derived[rm.table()[v]];
            if (slot == -1)
              slot = e.table()[v];
            else if (slot != e.table()[v])
              ok = false;
          }
          if (!ok) continue;
          std::vector<std::uint16_t> st(derived.begin(), derived.end());
          CubeMap s(k, n, std::move(st));
          if (ss.find(s) < 0) continue;
          if (compose(rm, s) == CubeMap::identity(k)) split = true;
        }
      }
      if (!split) {
        ++nonsplit;
        if (first_nonsplit.empty()) first_nonsplit = e.str();
        if (!diagonal) r.fail("idempotent does not split: " + e.str());
      }
    }
  }
  r.stats["idempotents"] = idempotents;
  r.stats["non_split"] = nonsplit;
  if (diagonal && nonsplit > 0)
    r.note = "non-split idempotents found (expected for this site), first: " + first_nonsplit;
  return r;
}

CheckReport split_epi_equivalences_check(const HomTable& homs, int N) {
  CheckReport r{.name = "split-epi-equivalences"};
  std::int64_t morphisms = 0;

  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= N; ++m) {
      const auto& hs = homs.at(n, m);
      for (std::size_t fi = 0; fi < hs.size(); ++fi) {
        const auto& f = hs.maps[fi];
        ++morphisms;
        const bool surj = hs.surjective[fi];
        const bool has_section = find_section(homs, f).has_value();

        bool yoneda_epi = true;
        for (int k = 0; k <= N && yoneda_epi; ++k) {
          const auto& source = homs.at(k, n);
          std::vector<char> hit(homs.at(k, m).size(), 0);
          std::size_t covered = 0;
          for (const auto& h : source.maps) {
            const int idx = homs.at(k, m).find(compose(f, h));
            if (idx >= 0 && !hit[idx]) {
              hit[idx] = 1;
              ++covered;
            }
          }
          yoneda_epi = covered == hit.size();
        }

        if (surj != has_section || surj != yoneda_epi)
          r.fail("section/surjective/representable-epi disagreement at " + f.str() +
                 ": section=" + std::to_string(has_section) + " surjective=" + std::to_string(surj) +
                 " repr-epi=" + std::to_string(yoneda_epi));
      }
    }

  // cobase change of a split epi along a certified absolute pushout stays split
  if (N >= 2) {
    const SiteConfig& cfg = homs.config();
    CubeMap f, g;
    if (cfg.has_meet() && cfg.has_join()) {
      f = atom_map(GeneratorAtom{AtomKind::meet, 1, -1}, 2);
      g = atom_map(GeneratorAtom{AtomKind::join, 1, -1}, 2);
    } else {
      f = atom_map(GeneratorAtom{AtomKind::proj, 1, -1}, 2);
      g = atom_map(GeneratorAtom{AtomKind::proj, 2, -1}, 2);
    }
    auto cert = find_absolute_pushout(homs, f, g, std::min(N + 1, homs.max_dim()));
    if (!cert)
      r.fail("no certified pushout for the sample span " + f.str() + ", " + g.str());
    else if (!find_section(homs, cert->leg_b) || !find_section(homs, cert->leg_c))
      r.fail("cobase change of a split epi lost its section at the sample span");
  }

  r.stats["morphisms"] = morphisms;
  return r;
}

CheckReport plus_maps_are_monos_check(const HomTable& homs, int N) {
  CheckReport r{.name = "face-maps-are-monos"};
  std::int64_t checked = 0;
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= N; ++m) {
      const auto& hs = homs.at(n, m);
      for (std::size_t fi = 0; fi < hs.size(); ++fi) {
        if (!hs.injective[fi]) continue;
        const auto& f = hs.maps[fi];
        ++checked;
        for (int k = 0; k <= N; ++k) {
          const auto& source = homs.at(k, n);
          std::vector<char> seen(homs.at(k, m).size(), 0);
          for (const auto& u : source.maps) {
            const int idx = homs.at(k, m).find(compose(f, u));
            if (idx < 0) {
              r.fail("composite leaves the site at " + f.str());
              continue;
            }
            if (seen[idx]) {
              r.fail("injective-class map is not monic: " + f.str());
              break;
            }
            seen[idx] = 1;
          }
        }
      }
    }
  r.stats["face_maps"] = checked;
  return r;
}

}  // namespace cubeforge
