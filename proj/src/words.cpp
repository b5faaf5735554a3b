#include "cubeforge/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace cubeforge {

int GeneratorAtom::dim_delta() const {
  switch (kind) {
    case AtomKind::face:
    case AtomKind::diag:
      return 1;
    case AtomKind::proj:
    case AtomKind::meet:
    case AtomKind::join:
      return -1;
    case AtomKind::sym:
    case AtomKind::rev:
      return 0;
  }
  return 0;
}

std::string GeneratorAtom::token() const {
  std::ostringstream out;
  switch (kind) {
    case AtomKind::face: out << 'd' << slot << (eps ? '+' : '-'); return out.str();
    case AtomKind::proj: out << 'p'; break;
    case AtomKind::meet: out << 'm'; break;
    case AtomKind::join: out << 'j'; break;
    case AtomKind::sym: out << 'x'; break;
    case AtomKind::rev: out << 'r'; break;
    case AtomKind::diag: out << 'c'; break;
  }
  out << slot;
  return out.str();
}

CubeMap atom_map(const GeneratorAtom& atom, int n) {
  const int slot = atom.slot;
  auto bad = [&](const char* why) {
    throw std::invalid_argument("atom " + atom.token() + " at dimension " + std::to_string(n) +
                                ": " + why);
  };
  if (n < 0 || n >= kMaxDim) bad("dimension out of range");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint16_t> t(size);
  auto low = [&](std::size_t v, int k) { return v & ((std::size_t{1} << k) - 1); };

  switch (atom.kind) {
    case AtomKind::face: {
      if (slot < 1 || slot > n + 1) bad("slot out of range");
      for (std::size_t v = 0; v < size; ++v)
        t[v] = static_cast<std::uint16_t>(low(v, slot - 1) |
                                          (std::size_t(atom.eps) << (slot - 1)) |
                                          ((v >> (slot - 1)) << slot));
      return CubeMap(n, n + 1, std::move(t));
    }
    case AtomKind::proj: {
      if (slot < 1 || slot > n) bad("slot out of range");
      for (std::size_t v = 0; v < size; ++v)
        t[v] = static_cast<std::uint16_t>(low(v, slot - 1) | ((v >> slot) << (slot - 1)));
      return CubeMap(n, n - 1, std::move(t));
    }
    case AtomKind::meet:
    case AtomKind::join: {
      if (slot < 1 || slot > n - 1) bad("slot out of range");
      for (std::size_t v = 0; v < size; ++v) {
        const std::size_t a = (v >> (slot - 1)) & 1, b = (v >> slot) & 1;
        const std::size_t m = atom.kind == AtomKind::meet ? (a & b) : (a | b);
        t[v] = static_cast<std::uint16_t>(low(v, slot - 1) | (m << (slot - 1)) |
                                          ((v >> (slot + 1)) << slot));
      }
      return CubeMap(n, n - 1, std::move(t));
    }
    case AtomKind::sym: {
      if (slot < 1 || slot > n - 1) bad("slot out of range");
      for (std::size_t v = 0; v < size; ++v) {
        const std::size_t a = (v >> (slot - 1)) & 1, b = (v >> slot) & 1;
        t[v] = static_cast<std::uint16_t>((v & ~(std::size_t{3} << (slot - 1))) |
                                          (b << (slot - 1)) | (a << slot));
      }
      return CubeMap(n, n, std::move(t));
    }
    case AtomKind::rev: {
      if (slot < 1 || slot > n) bad("slot out of range");
      for (std::size_t v = 0; v < size; ++v)
        t[v] = static_cast<std::uint16_t>(v ^ (std::size_t{1} << (slot - 1)));
      return CubeMap(n, n, std::move(t));
    }
    case AtomKind::diag: {
      if (slot < 1 || slot > n) bad("slot out of range");
      for (std::size_t v = 0; v < size; ++v) {
        const std::size_t a = (v >> (slot - 1)) & 1;
        t[v] = static_cast<std::uint16_t>(low(v, slot) | (a << slot) | ((v >> slot) << (slot + 1)));
      }
      return CubeMap(n, n + 1, std::move(t));
    }
  }
  bad("unreachable");
  return CubeMap();
}

namespace {

GeneratorAtom parse_atom(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  const char letter = text[pos++];
  GeneratorAtom a;
  switch (letter) {
    case 'd': a.kind = AtomKind::face; break;
    case 'p': a.kind = AtomKind::proj; break;
    case 'm': a.kind = AtomKind::meet; break;
    case 'j': a.kind = AtomKind::join; break;
    case 'x': a.kind = AtomKind::sym; break;
    case 'r': a.kind = AtomKind::rev; break;
    case 'c': a.kind = AtomKind::diag; break;
    default:
      throw WordParseError(std::string("unknown atom letter '") + letter + "'", start);
  }
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw WordParseError("expected slot index", pos);
  int slot = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    slot = slot * 10 + (text[pos++] - '0');
  a.slot = slot;
  if (a.kind == AtomKind::face) {
    if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
      throw WordParseError("face atom needs '+' or '-'", pos);
    a.eps = text[pos++] == '+' ? 1 : 0;
  }
  return a;
}

}  // namespace

GeneratorWord parse_word(std::string_view text, int dom_dim) {
  std::vector<std::pair<GeneratorAtom, std::size_t>> atoms;  // in text (right-to-left) order
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size()) throw WordParseError("empty word", pos);
  if (text[pos] == '1') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw WordParseError("trailing input after identity word", pos);
    return GeneratorWord{dom_dim, {}};
  }
  while (true) {
    atoms.emplace_back(GeneratorAtom{}, pos);
    atoms.back().first = parse_atom(text, pos);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '.') throw WordParseError("expected '.' between atoms", pos);
    ++pos;
    skip_ws();
    if (pos == text.size()) throw WordParseError("dangling '.'", pos);
  }

  GeneratorWord w{dom_dim, {}};
  int dim = dom_dim;
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
    const auto& [atom, at] = *it;
    try {
      atom_map(atom, dim);
    } catch (const std::invalid_argument& e) {
      throw WordParseError(e.what(), at);
    }
    w.levels.push_back(atom);
    dim += atom.dim_delta();
  }
  return w;
}

std::string print_word(const GeneratorWord& w) {
  if (w.levels.empty()) return "1";
  std::ostringstream out;
  for (auto it = w.levels.rbegin(); it != w.levels.rend(); ++it) {
    if (it != w.levels.rbegin()) out << " . ";
    out << it->token();
  }
  return out.str();
}

CubeMap evaluate(const GeneratorWord& w) {
  CubeMap f = CubeMap::identity(w.dom_dim);
  for (const auto& atom : w.levels) f = compose(atom_map(atom, f.cod()), f);
  return f;
}

bool atom_allowed(const SiteConfig& cfg, AtomKind kind) {
  switch (kind) {
    case AtomKind::face:
    case AtomKind::proj: return true;
    case AtomKind::meet: return cfg.has_meet();
    case AtomKind::join: return cfg.has_join();
    case AtomKind::sym: return cfg.symmetries;
    case AtomKind::rev: return cfg.reversals;
    case AtomKind::diag: return cfg.diagonals;
  }
  return false;
}

std::vector<GeneratorAtom> atoms_from(const SiteConfig& cfg, int n, int cap) {
  std::vector<GeneratorAtom> out;
  auto add = [&](AtomKind k, int slot, int eps = -1) {
    if (atom_allowed(cfg, k)) out.push_back(GeneratorAtom{k, slot, eps});
  };
  if (n + 1 <= cap) {
    for (int i = 1; i <= n + 1; ++i) {
      add(AtomKind::face, i, 0);
      add(AtomKind::face, i, 1);
    }
    for (int i = 1; i <= n; ++i) add(AtomKind::diag, i);
  }
  if (n - 1 >= 0) {
    for (int i = 1; i <= n; ++i) add(AtomKind::proj, i);
    for (int i = 1; i + 1 <= n; ++i) {
      add(AtomKind::meet, i);
      add(AtomKind::join, i);
    }
  }
  for (int i = 1; i + 1 <= n; ++i) add(AtomKind::sym, i);
  for (int i = 1; i <= n; ++i) add(AtomKind::rev, i);
  return out;
}

std::vector<CubeMap> generators_between(const SiteConfig& cfg, int n, int m) {
  if (n < 0 || m < 0 || std::abs(n - m) > 1)
    throw std::invalid_argument("generators_between requires |n - m| <= 1");
  std::set<CubeMap> out;
  for (const auto& atom : atoms_from(cfg, n, std::max(n, m)))
    if (n + atom.dim_delta() == m) out.insert(atom_map(atom, n));
  return {out.begin(), out.end()};
}

}  // namespace cubeforge
