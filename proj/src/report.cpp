#include "nichols/report.hpp"

#include <json.hpp>

namespace nichols {

bool VerifyReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

nlohmann::json report_json(const VerifyReport& r) {
  nlohmann::json j;
  j["family"] = r.family;
  j["row"] = r.row;
  j["conductor"] = r.conductor;
  auto params = nlohmann::json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  j["params"] = params;
  auto checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"pass", c.pass}});
  j["checks"] = checks;
  j["dims"] = r.dims;
  j["growth"] = r.growth;
  j["elapsed_ms"] = r.elapsed_ms;
  j["pass"] = r.pass();
  return j;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

constexpr const char* kCsvHeader =
    "family,conductor,check,expected,computed,result\n";

void csv_rows(const VerifyReport& r, std::string& out) {
  std::string prefix = csv_quote(r.family) + "," +
                       std::to_string(r.conductor) + ",";
  for (const auto& c : r.checks)
    out += prefix + csv_quote(c.name) + "," + csv_quote(c.expected) + "," +
           csv_quote(c.computed) + "," + (c.pass ? "pass" : "fail") + "\n";
  out += prefix + "overall,pass," + (r.pass() ? "pass,pass" : "fail,fail") +
         "\n";
}

void text_one(const VerifyReport& r, std::string& out) {
  out += r.family;
  if (!r.row.empty()) out += "  [" + r.row + "]";
  out += "\n  conductor " + std::to_string(r.conductor);
  if (!r.params.empty()) {
    out += ", ";
    bool first = true;
    for (const auto& [name, value] : r.params) {
      if (!first) out += ", ";
      first = false;
      out += name + " = " + value;
    }
  }
  out += "\n";
  unsigned passed = 0;
  for (const auto& c : r.checks) {
    passed += c.pass;
    out += std::string("  ") + (c.pass ? "[PASS] " : "[FAIL] ") + c.name +
           ": expected " + c.expected + ", computed " + c.computed + "\n";
  }
  out += "  dims:";
  for (auto d : r.dims) out += " " + std::to_string(d);
  out += "\n  growth: " + r.growth + "\n";
  out += "  elapsed: " + std::to_string(r.elapsed_ms) + " ms\n";
  out += std::string("  result: ") + (r.pass() ? "PASS" : "FAIL") + " (" +
         std::to_string(passed) + "/" + std::to_string(r.checks.size()) +
         " checks)\n";
}

}  // namespace

std::string render_json(const VerifyReport& report) {
  return report_json(report).dump(2);
}

std::string render_json(const std::vector<VerifyReport>& reports) {
  nlohmann::json j;
  auto arr = nlohmann::json::array();
  std::size_t passed = 0;
  for (const auto& r : reports) {
    arr.push_back(report_json(r));
    passed += r.pass();
  }
  j["reports"] = arr;
  j["passed"] = passed;
  j["total"] = reports.size();
  j["pass"] = passed == reports.size();
  return j.dump(2);
}

std::string render_csv(const VerifyReport& report) {
  std::string out = kCsvHeader;
  csv_rows(report, out);
  return out;
}

std::string render_csv(const std::vector<VerifyReport>& reports) {
  std::string out = kCsvHeader;
  for (const auto& r : reports) csv_rows(r, out);
  return out;
}

std::string render_text(const VerifyReport& report) {
  std::string out;
  text_one(report, out);
  return out;
}

std::string render_text(const std::vector<VerifyReport>& reports) {
  std::string out;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    if (!out.empty()) out += "\n";
    text_one(r, out);
    passed += r.pass();
  }
  out += "\nsuite: " + std::to_string(passed) + "/" +
         std::to_string(reports.size()) + " reports pass\n";
  return out;
}

}  // namespace nichols
