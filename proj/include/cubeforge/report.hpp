#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace cubeforge {

inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { pass, bounded_pass, fail };

/// Result of one verification sweep. A failing check carries witness strings
/// and, where possible, a CLI invocation that reproduces it.
struct CheckReport {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::vector<std::string> violations;
  std::map<std::string, std::int64_t> stats;
  std::string note;
  std::string repro;  // CLI invocation reproducing a failure
  double wall_ms = 0;

  bool pass() const { return status != CheckStatus::fail; }
  void fail(std::string witness) {
    status = CheckStatus::fail;
    violations.push_back(std::move(witness));
  }
};

struct SuiteReport {
  std::string tool_version = kToolVersion;
  std::string site;
  std::map<std::string, std::int64_t> bounds;  // N, K, slack, bound as applicable
  std::vector<CheckReport> checks;

  bool all_pass() const;
};

nlohmann::ordered_json to_json(const CheckReport& r, bool with_timings);
nlohmann::ordered_json to_json(const SuiteReport& r, bool with_timings);
std::string to_text(const SuiteReport& r);

const char* status_str(CheckStatus s);

}  // namespace cubeforge
