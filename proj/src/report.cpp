#include "cubeforge/report.hpp"

#include <sstream>

namespace cubeforge {

const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::bounded_pass: return "bounded-pass";
    case CheckStatus::fail: return "fail";
  }
  return "?";
}

bool SuiteReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass()) return false;
  return true;
}

nlohmann::ordered_json to_json(const CheckReport& r, bool with_timings) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["status"] = status_str(r.status);
  if (!r.violations.empty()) j["witnesses"] = r.violations;
  if (!r.repro.empty()) j["repro"] = r.repro;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.stats.empty()) j["stats"] = r.stats;
  if (with_timings) j["wall_ms"] = r.wall_ms;
  return j;
}

nlohmann::ordered_json to_json(const SuiteReport& r, bool with_timings) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["tool_version"] = r.tool_version;
  if (!r.site.empty()) j["site"] = r.site;
  if (!r.bounds.empty()) j["bounds"] = r.bounds;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) arr.push_back(to_json(c, with_timings));
  j["checks"] = arr;
  j["all_pass"] = r.all_pass();
  return j;
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream out;
  if (!r.site.empty()) out << "site " << r.site << "\n";
  for (const auto& c : r.checks) {
    out << "  [" << status_str(c.status) << "] " << c.name;
    if (c.wall_ms > 0) out << "  (" << static_cast<long>(c.wall_ms) << " ms)";
    out << "\n";
    if (!c.note.empty()) out << "      " << c.note << "\n";
    std::size_t shown = 0;
    for (const auto& v : c.violations) {
      if (++shown > 5) {
        out << "      ... " << (c.violations.size() - 5) << " more\n";
        break;
      }
      out << "      witness: " << v << "\n";
    }
  }
  return out.str();
}

}  // namespace cubeforge
