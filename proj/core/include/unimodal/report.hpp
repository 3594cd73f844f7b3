#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "unimodal/alpha_maps.hpp"

namespace unimodal {

struct Violation {
  AlphaMap alpha;
  std::string reason;
};

inline constexpr std::size_t kDefaultViolationCap = 64;

// Outcome of one mechanically checked claim. Only the first `cap` violations
// are kept verbatim; violation_count always holds the full number.
struct LemmaReport {
  LemmaReport() = default;
  explicit LemmaReport(std::string name, std::size_t m_ = 0, std::size_t n_ = 0)
      : lemma(std::move(name)), m(m_), n(n_) {}

  std::string lemma;
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t cases = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;
  double elapsed_ms = 0;  // never serialised, so reports stay byte stable

  void fail(const AlphaMap& alpha, std::string reason, std::size_t cap = kDefaultViolationCap);
  // Appends other's counters and violations (in order) to this one.
  void merge(const LemmaReport& other, std::size_t cap = kDefaultViolationCap);
  bool ok() const { return violation_count == 0; }
};

std::string report_json(const LemmaReport& r);
// One JSON array, one report per element, in the given order.
std::string reports_json(const std::vector<LemmaReport>& reports);
std::string reports_table(const std::vector<LemmaReport>& reports);

bool all_ok(const std::vector<LemmaReport>& reports);
const LemmaReport* find_report(const std::vector<LemmaReport>& reports, const std::string& lemma);

}  // namespace unimodal
