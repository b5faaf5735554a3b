#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cubeforge {

enum class Connections { none, meet, join, both };

/**
 * Which structural generators a cubical site admits.
 *
 * Closure rules enforced by validate()/parse():
 *   - diagonals require symmetries (a diagonal followed by a projection
 *     produces the swap, so a diagonal site always carries them);
 *   - reversals together with one connection force both connections
 *     (reversing a meet gives a join). Such configs are rejected rather
 *     than silently promoted.
 */
struct SiteConfig {
  Connections connections = Connections::none;
  bool symmetries = false;
  bool reversals = false;
  bool diagonals = false;

  bool has_meet() const { return connections == Connections::meet || connections == Connections::both; }
  bool has_join() const { return connections == Connections::join || connections == Connections::both; }

  /// Throws std::invalid_argument when the closure rules are violated.
  void validate() const;

  /// Accepts canonical aliases ("plain", "cs", "csr", "dcs", "cw", ...) and
  /// the explicit form "c=both,s=1,r=0,d=0".
  static SiteConfig parse(std::string_view spec);

  std::string spec_string() const;    // always the explicit c=..,s=..,r=..,d=.. form
  std::string name() const;           // alias when one exists, spec_string() otherwise

  /// Compact key for caching (valid configs only).
  int key() const {
    return static_cast<int>(connections) | (symmetries << 2) | (reversals << 3) | (diagonals << 4);
  }

  friend bool operator==(const SiteConfig&, const SiteConfig&) = default;

  static std::vector<SiteConfig> all_nondiagonal();  // the 12 valid non-diagonal configs
  static std::vector<SiteConfig> all_diagonal();     // the 6 valid diagonal configs
};

}  // namespace cubeforge
