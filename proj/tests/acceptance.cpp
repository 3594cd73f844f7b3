// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Budgets are wall-clock seconds and count toward the verdict.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "unimodal/alpha_maps.hpp"
#include "unimodal/indpoly.hpp"
#include "unimodal/proof_check.hpp"
#include "unimodal/spider_checks.hpp"
#include "unimodal/symfunc2.hpp"

using namespace unimodal;

namespace {

constexpr std::uint64_t kSeed = 0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every tree polynomial produced by criteria 1-3, for criterion 10.
std::vector<std::pair<std::string, bool>> g_tails;

void record_tail(const std::string& what, const IntPoly& p) { g_tails.emplace_back(what, analyze(p).tail_ok); }

std::string cell(Family f, std::size_t m, std::size_t n) {
  return std::string(family_id(f)) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::size_t> size(1, 20);
  std::size_t checked = 0;
  for (int i = 0; i < 200; ++i) {
    Graph g = oracle::random_forest(rng, size(rng), 0.85);
    IntPoly fast = indpoly_tree(g);
    record_tail("random forest " + std::to_string(i), fast);
    if (fast != indpoly_bruteforce(g)) {
      o.pass = false;
      o.detail += " forest#" + std::to_string(i);
    }
    ++checked;
  }
  for (auto f : {Family::T3mn, Family::T3mnStar})
    for (std::size_t m = 0; m <= 3; ++m)
      for (std::size_t n = 0; n <= 3; ++n) {
        Graph g = build_family(f, m, n);
        IntPoly fast = indpoly_tree(g);
        record_tail(cell(f, m, n), fast);
        if (fast != indpoly_bruteforce(g)) {
          o.pass = false;
          o.detail += " " + cell(f, m, n);
        }
        ++checked;
      }
  o.detail = std::to_string(checked) + " graphs" + (o.pass ? "" : ", mismatch at" + o.detail);
  return o;
}

Outcome unimodal_grid() {
  Outcome o;
  std::size_t cells = 0;
  for (auto f : {Family::T3mn, Family::T3mnStar}) {
    for (const ScanRow& r : scan_families(1, 12, 1, 12, f)) {
      record_tail(cell(f, r.m, r.n), r.poly);
      ++cells;
      if (!r.report.unimodal) {
        o.pass = false;
        o.detail += " " + cell(f, r.m, r.n);
      }
    }
  }
  o.detail = std::to_string(cells) + " cells" + (o.pass ? " unimodal" : ", not unimodal:" + o.detail);
  return o;
}

Outcome non_log_concave() {
  std::vector<std::pair<Family, std::pair<long, long>>> cells;
  for (long k = 3; k <= 6; ++k) {
    cells.push_back({Family::T3mn, {k + 1, k + 1}});
    cells.push_back({Family::T3mnStar, {k, k + 1}});
  }
  for (long k = 4; k <= 6; ++k) {
    cells.push_back({Family::T3mn, {k, k + 1}});
    cells.push_back({Family::T3mn, {k, k + 2}});
    cells.push_back({Family::T3mnStar, {k - 1, k + 1}});
    cells.push_back({Family::T3mnStar, {k, k + 3}});
    cells.push_back({Family::T3mnStar, {k, k}});
  }
  Outcome o;
  for (const auto& [f, mn] : cells) {
    IntPoly p = indpoly_tree(build_family(f, mn.first, mn.second));
    record_tail(cell(f, mn.first, mn.second), p);
    if (analyze(p).log_concave) {
      o.pass = false;
      o.detail += " " + cell(f, mn.first, mn.second);
    }
  }
  o.detail = std::to_string(cells.size()) + " cells" + (o.pass ? " all break log-concavity" : ", log-concave:" + o.detail);
  return o;
}

Outcome schur_defect_law() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<std::size_t> deg(0, 12);
  std::uniform_int_distribution<unsigned long> coef(1, 1000000000000UL);
  std::size_t checks = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<BigInt> a{1};  // P(0) = 1, the rest positive
    std::size_t d = deg(rng);
    for (std::size_t j = 1; j <= d; ++j) a.emplace_back(coef(rng));
    BivariateSymPoly f = f_p_2var(IntPoly(a));
    oracle::Poly2 direct = oracle::product_of_univariate(a);
    oracle::Poly2 got;
    for (const auto& [e, c] : f.terms()) got[e] = c;
    if (got != direct) o.pass = false;
    for (std::size_t k = 0; k <= d + 1; ++k, ++checks)
      if (schur_coefficient(f, k, k) != oracle::defect(a, k)) {
        o.pass = false;
        o.detail = " first mismatch at P#" + std::to_string(i) + " k=" + std::to_string(k);
      }
  }
  o.detail = std::to_string(checks) + " coefficients" + o.detail;
  return o;
}

Outcome stanley_identity() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  for (int i = 0; i < 50; ++i) {
    Graph g = oracle::random_tree(rng, size(rng));
    BivariateSymPoly alpha_sum = y_g_2var_alpha_sum(g);
    oracle::Poly2 got;
    for (const auto& [e, c] : alpha_sum.terms()) got[e] = c;
    if (got != oracle::product_of_univariate(oracle::indpoly_subsets(g)) || alpha_sum != y_g_2var_component_sum(g)) {
      o.pass = false;
      o.detail += " tree#" + std::to_string(i);
    }
  }
  o.detail = "50 trees" + (o.pass ? std::string(", literal alpha sum = I(x1)I(x2)") : ", mismatch:" + o.detail);
  return o;
}

Outcome skk_bridge() {
  Outcome o;
  std::size_t enumerated = 0;
  for (auto f : {Family::T3mn, Family::T3mnStar})
    for (std::size_t m = 0; m <= 3; ++m)
      for (std::size_t n = 0; n <= 3; ++n) {
        Graph g = build_family(f, m, n);
        IntPoly p = indpoly_tree(g);
        auto defects = log_concavity_defects(p);
        BivariateSymPoly y = y_g_2var_component_sum(g);
        // Up to 18 vertices also sum s_kk alpha by alpha.
        std::vector<std::int64_t> by_alpha;
        const bool enumerate = g.vertex_count() <= 18;
        if (enumerate) {
          by_alpha.assign(p.degree() + 2, 0);
          ShadowEvaluator ev(g);
          HomogeneousShadow h;
          for_each_feasible(g, [&](std::span<const unsigned> a) {
            ev.evaluate(a, h);
            if (!h.is_zero() && h.degree() % 2 == 0 && h.degree() / 2 < by_alpha.size())
              by_alpha[h.degree() / 2] += h.skk(h.degree() / 2);
          });
          ++enumerated;
        }
        for (std::size_t k = 0; k <= p.degree() + 1; ++k) {
          BigInt want = k < defects.size() ? defects[k] : BigInt(0);
          bool ok = schur_coefficient(y, k, k) == want;
          if (enumerate) ok = ok && BigInt(static_cast<long>(by_alpha[k])) == want;
          if (!ok) {
            o.pass = false;
            o.detail += " " + cell(f, m, n) + "@k=" + std::to_string(k);
          }
        }
      }
  o.detail = "32 trees (" + std::to_string(enumerated) + " also alpha by alpha)" +
             (o.pass ? "" : ", mismatch:" + o.detail);
  return o;
}

Outcome require_clean(const std::vector<LemmaReport>& reports, const std::vector<std::string>& required,
                      std::size_t m, std::size_t n, std::vector<std::string>& notes) {
  Outcome o;
  for (const auto& name : required) {
    const LemmaReport* r = nullptr;
    for (const auto& x : reports)
      if (x.lemma == name && x.m == m && x.n == n) r = &x;
    if (!r) {
      o.pass = false;
      notes.push_back(name + " missing at (" + std::to_string(m) + "," + std::to_string(n) + ")");
    } else if (!r->ok()) {
      o.pass = false;
      notes.push_back(name + "(" + std::to_string(m) + "," + std::to_string(n) + ")=" +
                      std::to_string(r->violation_count));
    }
  }
  return o;
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " ") + x;
  return s;
}

Outcome spider_suite() {
  auto reports = verify_spider_suite();
  Outcome o;
  std::vector<std::string> bad;
  std::uint64_t cases = 0;
  for (const auto& r : reports) {
    cases += r.cases;
    if (!r.ok()) bad.push_back(r.lemma + "=" + std::to_string(r.violation_count));
  }
  o.pass = bad.empty();
  o.detail = std::to_string(reports.size()) + " checks, " + std::to_string(cases) + " cases" +
             (bad.empty() ? "" : ", violations: " + join(bad));
  return o;
}

// Other reports that fail outside the criterion's own list are named too.
void note_extra(const std::vector<LemmaReport>& reports, const std::vector<std::string>& required,
                std::vector<std::string>& extra) {
  for (const auto& r : reports) {
    if (r.ok()) continue;
    bool listed = false;
    for (const auto& name : required) listed = listed || name == r.lemma;
    if (!listed)
      extra.push_back(r.lemma + "(" + std::to_string(r.m) + "," + std::to_string(r.n) + ")=" +
                      std::to_string(r.violation_count));
  }
}

Outcome tree_audit() {
  const std::vector<std::string> required{"tree.partition",  "tree.map-defined", "tree.image-in-class",
                                          "tree.image-positive", "tree.pairing", "tree.injective",
                                          "tree.top-class-vanishing", "tree.y-skk"};
  Outcome o;
  std::vector<std::string> notes, extra;
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    auto reports = verify_section4(m, n);
    o.pass = require_clean(reports, required, m, n, notes).pass && o.pass;
    note_extra(reports, required, extra);
  }
  o.detail = notes.empty() ? "all required checks clean" : "violations: " + join(notes);
  if (!extra.empty()) o.detail += "; outside this criterion: " + join(extra);
  return o;
}

Outcome star_audit() {
  const std::vector<std::string> required{
      "star.partition",     "star.map-defined",        "star.cleared-tail-domain", "star.image-in-class",
      "star.image-positive", "star.pairing",           "star.injective",           "star.keeps-x-y-v13p",
      "star.path-append-zero", "star.path-append-two", "star.path-append-pair",    "star.path-append-open",
      "star.inner-keeps-v13p", "star.y-skk"};
  Outcome o;
  std::vector<std::string> notes, extra;
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 2}, {2, 2}}) {
    auto reports = verify_section5(m, n);
    o.pass = require_clean(reports, required, m, n, notes).pass && o.pass;
    note_extra(reports, required, extra);
  }
  o.detail = notes.empty() ? "all required checks clean" : "violations: " + join(notes);
  if (!extra.empty()) o.detail += "; also: " + join(extra);
  return o;
}

Outcome tails() {
  Outcome o;
  std::size_t bad = 0;
  for (const auto& [what, ok] : g_tails)
    if (!ok) {
      ++bad;
      o.detail += " " + what;
    }
  o.pass = bad == 0 && !g_tails.empty();
  o.detail = std::to_string(g_tails.size()) + " polynomials" + (bad ? ", tail fails:" + o.detail : "");
  return o;
}

Outcome determinism() {
  Outcome o;
  VerifyOptions serial, wide;
  serial.threads = 1;
  wide.threads = 4;
  bool same = reports_json(verify_section4(1, 2, serial)) == reports_json(verify_section4(1, 2, wide));
  same = same && reports_json(verify_section5(1, 1, serial)) == reports_json(verify_section5(1, 1, wide));
  SpiderSuiteOptions small;
  small.max_legs = 3;
  small.forest_legs = 3;
  same = same && reports_json(verify_spider_suite(small)) == reports_json(verify_spider_suite(small));
  std::string a, b;
  for (const auto& r : scan_families(1, 8, 1, 8, Family::T3mnStar, 1)) a += scan_row_json(r);
  for (const auto& r : scan_families(1, 8, 1, 8, Family::T3mnStar, 4)) b += scan_row_json(r);
  same = same && a == b;
  o.pass = same;
  o.detail = same ? "tree, extended-tree, spider and scan JSON byte-identical across runs and thread counts"
                  : "outputs differ between runs";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0: no time budget
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "oracle-equivalence", 10, oracle_equivalence},
      {2, "unimodal-grid", 60, unimodal_grid},
      {3, "non-log-concave-cells", 30, non_log_concave},
      {4, "schur-defect-law", 5, schur_defect_law},
      {5, "stanley-identity", 60, stanley_identity},
      {6, "skk-bridge", 30, skk_bridge},
      {7, "spider-suite", 120, spider_suite},
      {8, "tree-audit", 600, tree_audit},
      {9, "extended-tree-audit", 600, star_audit},
      {10, "decreasing-tail", 0, tails},
      {11, "determinism", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = c.budget_s == 0 || secs <= c.budget_s;
    bool pass = o.pass && in_time;
    failed += !pass;
    char timing[64];
    if (c.budget_s > 0)
      std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.budget_s);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (pass ? "PASS" : "FAIL") << ' ' << c.id << ' ' << c.name << " [" << timing << "] " << o.detail
              << (in_time ? "" : " (over time budget)") << std::endl;
  }
  std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria pass" << std::endl;
  return failed ? 1 : 0;
}
