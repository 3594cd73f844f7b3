#include "unimodal/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace unimodal {

void LemmaReport::fail(const AlphaMap& alpha, std::string reason, std::size_t cap) {
  ++violation_count;
  if (violations.size() < cap) violations.push_back({alpha, std::move(reason)});
}

void LemmaReport::merge(const LemmaReport& other, std::size_t cap) {
  cases += other.cases;
  violation_count += other.violation_count;
  for (const auto& v : other.violations) {
    if (violations.size() >= cap) break;
    violations.push_back(v);
  }
  elapsed_ms += other.elapsed_ms;
}

namespace {

nlohmann::ordered_json to_json_value(const LemmaReport& r) {
  nlohmann::ordered_json j;
  j["lemma"] = r.lemma;
  j["m"] = r.m;
  j["n"] = r.n;
  j["cases"] = r.cases;
  j["violation_count"] = r.violation_count;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) {
    nlohmann::ordered_json e;
    e["alpha"] = v.alpha.vec();
    e["reason"] = v.reason;
    arr.push_back(std::move(e));
  }
  j["violations"] = std::move(arr);
  return j;
}

}  // namespace

std::string report_json(const LemmaReport& r) { return to_json_value(r).dump(); }

std::string reports_json(const std::vector<LemmaReport>& reports) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json_value(r));
  return arr.dump(2);
}

std::string reports_table(const std::vector<LemmaReport>& reports) {
  std::size_t width = 5;
  for (const auto& r : reports) width = std::max(width, r.lemma.size());
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-*s %4s %4s %12s %10s  %s\n", static_cast<int>(width), "lemma", "m",
                "n", "cases", "violations", "status");
  out += line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-*s %4zu %4zu %12llu %10llu  %s\n", static_cast<int>(width),
                  r.lemma.c_str(), r.m, r.n, static_cast<unsigned long long>(r.cases),
                  static_cast<unsigned long long>(r.violation_count), r.ok() ? "ok" : "FAIL");
    out += line;
    for (const auto& v : r.violations) out += "    " + v.alpha.to_json() + "  " + v.reason + "\n";
  }
  return out;
}

bool all_ok(const std::vector<LemmaReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const LemmaReport& r) { return r.ok(); });
}

const LemmaReport* find_report(const std::vector<LemmaReport>& reports, const std::string& lemma) {
  for (const auto& r : reports)
    if (r.lemma == lemma) return &r;
  return nullptr;
}

}  // namespace unimodal
