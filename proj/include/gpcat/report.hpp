#pragma once

// Command dispatch and versioned JSON reports.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gpcat {

using json = nlohmann::json;

inline constexpr const char* report_schema = "gpcat-report/1";

struct RunConfig {
  /// cat-info, gdim, resolve, nakayama, derived, tor, ext, check, profile-base, enumerate, fixtures.
  std::string command;
  /// For check: gproj-p, monic, gp, lifted, discrepancy.
  std::string kind;
  std::vector<std::string> inputs;
  /// functor, degree, x, f, dims, route, dir.
  std::map<std::string, std::string> options;
  std::size_t cutoff = 16;
  std::size_t enumeration_limit = std::size_t(1) << 22;
  std::optional<std::string> field;
  std::string out;
};

struct RunResult {
  /// 0 definite, 1 input error, 2 inconclusive.
  int exit_code = 0;
  json report;
  /// report.dump(2) plus a newline; byte-identical for identical inputs.
  std::string text;
};

/// Never throws; failures are reported with exit code 1.  Writes `out` when set.
RunResult run(const RunConfig& config);

/// Category and representation files below `dir`, sorted by relative path.
std::vector<std::string> list_fixtures(const std::string& dir);

}  // namespace gpcat
