// Verification reports and their renderings.
//
// A report is a flat list of named checks plus the computed Hilbert window.
// Renderings are byte-stable for fixed inputs except for the elapsed_ms
// field, which callers must mask before comparing full documents.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nichols {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerifyReport {
  std::string family;  // catalog family name, or "custom" for file input
  std::string row;     // matched row guard, empty for custom input
  unsigned conductor = 1;
  std::vector<std::pair<std::string, std::string>> params;  // sorted by name
  std::vector<CheckResult> checks;
  std::vector<std::uint64_t> dims;  // degrees 0..max_degree
  std::string growth;               // growth tag, "UNKNOWN" below degree 6
  long long elapsed_ms = 0;

  bool pass() const;
};

// JSON object with alphabetically sorted keys; two-space indent.
std::string render_json(const VerifyReport& report);
// {"pass": ..., "passed": n, "reports": [...], "total": n}
std::string render_json(const std::vector<VerifyReport>& reports);

// One line per check: family,conductor,check,expected,computed,pass
// followed by an "overall" line per report. Timing is omitted so the
// output is byte-stable.
std::string render_csv(const VerifyReport& report);
std::string render_csv(const std::vector<VerifyReport>& reports);

std::string render_text(const VerifyReport& report);
std::string render_text(const std::vector<VerifyReport>& reports);

}  // namespace nichols
