#include "cubeforge/cube.hpp"

#include <sstream>
#include <stdexcept>

namespace cubeforge {

std::string varset_str(VarSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int j = 1; j <= 32; ++j) {
    if (s & (VarSet{1} << (j - 1))) {
      if (!first) out << ',';
      out << j;
      first = false;
    }
  }
  out << '}';
  return out.str();
}

CubeMap::CubeMap(int dom_dim, int cod_dim, std::vector<std::uint16_t> table)
    : dom_(dom_dim), cod_(cod_dim), table_(std::move(table)) {
  if (dom_ < 0 || cod_ < 0 || dom_ > kMaxDim || cod_ > kMaxDim)
    throw std::invalid_argument("cube dimension out of range");
  if (table_.size() != std::size_t{1} << dom_)
    throw std::invalid_argument("vertex table has wrong length");
  for (auto v : table_)
    if (v >= (1u << cod_)) throw std::invalid_argument("vertex table entry out of range");
}

CubeMap CubeMap::identity(CubeObject n) {
  std::vector<std::uint16_t> t(std::size_t{1} << n.dim);
  for (std::size_t v = 0; v < t.size(); ++v) t[v] = static_cast<std::uint16_t>(v);
  return CubeMap(n.dim, n.dim, std::move(t));
}

std::string CubeMap::str() const {
  std::ostringstream out;
  out << dom_ << "->" << cod_ << ":[";
  for (std::size_t v = 0; v < table_.size(); ++v) {
    if (v) out << ',';
    out << table_[v];
  }
  out << ']';
  return out.str();
}

std::strong_ordering operator<=>(const CubeMap& a, const CubeMap& b) {
  if (auto c = a.dom_ <=> b.dom_; c != 0) return c;
  if (auto c = a.cod_ <=> b.cod_; c != 0) return c;
  return a.table_ <=> b.table_;
}

std::size_t CubeMapHash::operator()(const CubeMap& f) const {
  // splitmix-style fold over the table
  std::uint64_t h = (std::uint64_t(f.dom()) << 32) ^ std::uint64_t(f.cod());
  for (auto v : f.table()) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 31;
  }
  return static_cast<std::size_t>(h);
}

CubeMap compose(const CubeMap& g, const CubeMap& f) {
  if (f.cod() != g.dom()) throw std::invalid_argument("compose: dimension mismatch");
  std::vector<std::uint16_t> t(f.table().size());
  for (std::size_t v = 0; v < t.size(); ++v) t[v] = g(f.table()[v]);
  return CubeMap(f.dom(), g.cod(), std::move(t));
}

CubeMap tensor(const CubeMap& f, const CubeMap& g) {
  const int n = f.dom() + g.dom();
  const int m = f.cod() + g.cod();
  if (n > kMaxDim || m > kMaxDim) throw std::invalid_argument("tensor: dimension out of range");
  std::vector<std::uint16_t> t(std::size_t{1} << n);
  const std::uint16_t lo_mask = static_cast<std::uint16_t>((1u << f.dom()) - 1);
  for (std::size_t v = 0; v < t.size(); ++v) {
    const std::uint16_t a = static_cast<std::uint16_t>(v) & lo_mask;
    const std::uint16_t b = static_cast<std::uint16_t>(v >> f.dom());
    t[v] = static_cast<std::uint16_t>(f(a) | (g(b) << f.cod()));
  }
  return CubeMap(n, m, std::move(t));
}

MapTraits classify_map(const CubeMap& f) {
  MapTraits r;
  std::vector<char> hit(std::size_t{1} << f.cod(), 0);
  bool injective = true;
  std::size_t image = 0;
  for (auto v : f.table()) {
    if (hit[v])
      injective = false;
    else {
      hit[v] = 1;
      ++image;
    }
  }
  r.injective = injective;
  r.surjective = image == hit.size();
  r.iso = r.injective && r.surjective && f.dom() == f.cod();
  return r;
}

DependencySets dependency(const CubeMap& f) {
  DependencySets d;
  d.dom_dim = f.dom();
  d.cod_dim = f.cod();
  d.by_output.assign(f.cod(), 0);
  VarSet used = 0;
  const std::size_t size = f.table().size();
  for (int j = 1; j <= f.dom(); ++j) {
    const std::size_t bit = std::size_t{1} << (j - 1);
    std::uint16_t diff = 0;
    for (std::size_t v = 0; v < size; ++v) {
      if (v & bit) continue;
      diff |= f.table()[v] ^ f.table()[v | bit];
    }
    for (int i = 1; i <= f.cod(); ++i)
      if (diff & (1u << (i - 1))) {
        d.by_output[i - 1] |= VarSet{1} << (j - 1);
        used |= VarSet{1} << (j - 1);
      }
  }
  d.trivial = static_cast<VarSet>(((VarSet{1} << f.dom()) - 1) & ~used);
  return d;
}

}  // namespace cubeforge
