#include "cubeforge/site_config.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace cubeforge {

namespace {

struct Alias {
  const char* name;
  SiteConfig cfg;
};

constexpr Connections kNone = Connections::none;
constexpr Connections kMeet = Connections::meet;
constexpr Connections kJoin = Connections::join;
constexpr Connections kBoth = Connections::both;

const std::array<Alias, 18> kAliases = {{
    {"plain", {kNone, false, false, false}},
    {"s", {kNone, true, false, false}},
    {"r", {kNone, false, true, false}},
    {"sr", {kNone, true, true, false}},
    {"c", {kBoth, false, false, false}},
    {"cs", {kBoth, true, false, false}},
    {"cr", {kBoth, false, true, false}},
    {"csr", {kBoth, true, true, false}},
    {"cw", {kMeet, false, false, false}},
    {"cv", {kJoin, false, false, false}},
    {"cws", {kMeet, true, false, false}},
    {"cvs", {kJoin, true, false, false}},
    {"ds", {kNone, true, false, true}},
    {"dsr", {kNone, true, true, true}},
    {"dcs", {kBoth, true, false, true}},
    {"dcsr", {kBoth, true, true, true}},
    {"dcws", {kMeet, true, false, true}},
    {"dcvs", {kJoin, true, false, true}},
}};

Connections parse_connections(std::string_view v) {
  if (v == "none" || v == "0") return kNone;
  if (v == "meet" || v == "w") return kMeet;
  if (v == "join" || v == "v") return kJoin;
  if (v == "both" || v == "1") return kBoth;
  throw std::invalid_argument("bad connections value '" + std::string(v) + "'");
}

bool parse_bool(std::string_view v) {
  if (v == "0" || v == "false") return false;
  if (v == "1" || v == "true") return true;
  throw std::invalid_argument("bad boolean value '" + std::string(v) + "'");
}

}  // namespace

void SiteConfig::validate() const {
  if (diagonals && !symmetries)
    throw std::invalid_argument("invalid site: diagonals require symmetries");
  if (reversals && (connections == kMeet || connections == kJoin))
    throw std::invalid_argument(
        "invalid site: reversals with a single connection force both connections");
}

SiteConfig SiteConfig::parse(std::string_view spec) {
  for (const auto& a : kAliases)
    if (spec == a.name) return a.cfg;

  SiteConfig cfg;
  std::string s(spec);
  std::erase_if(s, [](char c) { return c == ' '; });
  std::istringstream in(s);
  std::string item;
  bool any = false;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("unknown site spec '" + std::string(spec) + "'");
    const std::string k = item.substr(0, eq), v = item.substr(eq + 1);
    if (k == "c")
      cfg.connections = parse_connections(v);
    else if (k == "s")
      cfg.symmetries = parse_bool(v);
    else if (k == "r")
      cfg.reversals = parse_bool(v);
    else if (k == "d")
      cfg.diagonals = parse_bool(v);
    else
      throw std::invalid_argument("unknown site spec key '" + k + "'");
    any = true;
  }
  if (!any) throw std::invalid_argument("empty site spec");
  cfg.validate();
  return cfg;
}

std::string SiteConfig::spec_string() const {
  static const char* cn[] = {"none", "meet", "join", "both"};
  std::ostringstream out;
  out << "c=" << cn[static_cast<int>(connections)] << ",s=" << int(symmetries)
      << ",r=" << int(reversals) << ",d=" << int(diagonals);
  return out.str();
}

std::string SiteConfig::name() const {
  for (const auto& a : kAliases)
    if (a.cfg == *this) return a.name;
  return spec_string();
}

std::vector<SiteConfig> SiteConfig::all_nondiagonal() {
  std::vector<SiteConfig> out;
  for (Connections c : {kNone, kMeet, kJoin, kBoth})
    for (bool s : {false, true})
      for (bool r : {false, true}) {
        SiteConfig cfg{c, s, r, false};
        try {
          cfg.validate();
        } catch (const std::invalid_argument&) {
          continue;
        }
        out.push_back(cfg);
      }
  return out;
}

std::vector<SiteConfig> SiteConfig::all_diagonal() {
  std::vector<SiteConfig> out;
  for (Connections c : {kNone, kMeet, kJoin, kBoth})
    for (bool r : {false, true}) {
      SiteConfig cfg{c, true, r, true};
      try {
        cfg.validate();
      } catch (const std::invalid_argument&) {
        continue;
      }
      out.push_back(cfg);
    }
  return out;
}

}  // namespace cubeforge
