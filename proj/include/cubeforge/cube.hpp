#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cubeforge {

/// Hard cap on cube dimension; vertex tables have 2^dim entries.
inline constexpr int kMaxDim = 14;

/// The object □ⁿ = {0,1}ⁿ. Objects are determined by their dimension.
struct CubeObject {
  int dim = 0;
  constexpr CubeObject(int d = 0) : dim(d) {}
  friend constexpr bool operator==(CubeObject, CubeObject) = default;
};

/// Set of input-variable indices encoded as a bitmask (bit j-1 = variable j).
using VarSet = std::uint32_t;

std::string varset_str(VarSet s);

/**
 * A map of cubes □ⁿ → □ᵐ given by its full vertex table.
 *
 * Vertices are integers whose bit j-1 holds coordinate j (coordinate 1 is the
 * least significant bit). table()[v] is the image of vertex v. Maps are
 * values: two maps are equal iff (dom, cod, table) coincide.
 */
class CubeMap {
 public:
  CubeMap() = default;
  CubeMap(int dom_dim, int cod_dim, std::vector<std::uint16_t> table);

  static CubeMap identity(CubeObject n);

  int dom() const { return dom_; }
  int cod() const { return cod_; }
  std::uint16_t operator()(std::uint16_t v) const { return table_[v]; }
  const std::vector<std::uint16_t>& table() const { return table_; }

  std::string str() const;  // "2->1:[0,0,0,1]"

  friend bool operator==(const CubeMap& a, const CubeMap& b) = default;
  friend std::strong_ordering operator<=>(const CubeMap& a, const CubeMap& b);

 private:
  int dom_ = 0;
  int cod_ = 0;
  std::vector<std::uint16_t> table_{0};
};

struct CubeMapHash {
  std::size_t operator()(const CubeMap& f) const;
};

/// g ∘ f. Throws std::invalid_argument on a dimension mismatch.
CubeMap compose(const CubeMap& g, const CubeMap& f);

/// f ⊗ g: acts as f on the low block of coordinates and g on the high block.
CubeMap tensor(const CubeMap& f, const CubeMap& g);

struct MapTraits {
  bool injective = false;
  bool surjective = false;
  bool iso = false;
};

MapTraits classify_map(const CubeMap& f);

/**
 * Per-output dependency sets: variable j belongs to by_output[i-1] iff some
 * flip of input j changes output bit i (scanned over all 2^(n-1) contexts).
 * trivial collects the inputs appearing in no output's set.
 */
struct DependencySets {
  int dom_dim = 0;
  int cod_dim = 0;
  std::vector<VarSet> by_output;
  VarSet trivial = 0;
};

DependencySets dependency(const CubeMap& f);

}  // namespace cubeforge
