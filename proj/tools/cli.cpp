#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "unimodal/indpoly.hpp"
#include "unimodal/proof_check.hpp"
#include "unimodal/spider_checks.hpp"

namespace unimodal::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  std::size_t lo = 0, hi = 0;
};

// Defaults keep every documented command around a minute on one core.
constexpr std::size_t kGridSideGuard = 200;
constexpr std::size_t kGridCellGuard = 2500;
constexpr std::size_t kAuditVertexGuard = 20;  // T(3,2,2) has 18, the extension 20
constexpr std::size_t kAuditVertexHard = 32;   // packing limit of the enumerator
constexpr std::size_t kSpiderLegGuard = 5;

struct RunConfig {
  std::string command;
  std::string family_name = "t3mn";
  std::string m_text = "0", n_text = "0";
  std::string diag, k_text;
  std::string format;
  std::string output;
  std::string suite;
  std::vector<std::string> asserts;
  bool no_guard = false;
  unsigned long seed = 0;
  unsigned threads = 0;
};

std::size_t parse_count(const std::string& s, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError(std::string("bad ") + what + ": '" + s + "'");
  try {
    return std::stoul(s);
  } catch (const std::exception&) {
    throw UsageError(std::string("bad ") + what + ": '" + s + "'");
  }
}

// "a..b" or a single "a".
Range parse_range(const std::string& s, const char* what) {
  auto dots = s.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_count(s, what);
  } else {
    r.lo = parse_count(s.substr(0, dots), what);
    r.hi = parse_count(s.substr(dots + 2), what);
  }
  if (r.lo > r.hi) throw UsageError(std::string("empty ") + what + " range '" + s + "'");
  return r;
}

Family parse_family(const std::string& s) {
  if (s == "t3mn") return Family::T3mn;
  if (s == "t3mn-star" || s == "t3mn_star") return Family::T3mnStar;
  if (s == "spider2") return Family::Spider2;
  throw UsageError("unknown family '" + s + "' (t3mn, t3mn-star, spider2)");
}

// One coordinate of a --diag expression: k, k+c, k-c or a constant.
long eval_diag_term(std::string term, long k) {
  term.erase(std::remove_if(term.begin(), term.end(), [](unsigned char c) { return std::isspace(c); }),
             term.end());
  if (term.empty()) throw UsageError("empty --diag term");
  if (term[0] != 'k') return static_cast<long>(parse_count(term, "--diag term"));
  if (term.size() == 1) return k;
  if (term[1] != '+' && term[1] != '-') throw UsageError("bad --diag term '" + term + "'");
  long c = static_cast<long>(parse_count(term.substr(2), "--diag offset"));
  return term[1] == '+' ? k + c : k - c;
}

std::vector<std::pair<std::size_t, std::size_t>> grid_cells(const RunConfig& cfg) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  if (!cfg.diag.empty()) {
    auto comma = cfg.diag.find(',');
    if (comma == std::string::npos) throw UsageError("--diag wants two terms, like k,k+1");
    if (cfg.k_text.empty()) throw UsageError("--diag needs -k");
    Range kr = parse_range(cfg.k_text, "-k");
    for (std::size_t k = kr.lo; k <= kr.hi; ++k) {
      long m = eval_diag_term(cfg.diag.substr(0, comma), static_cast<long>(k));
      long n = eval_diag_term(cfg.diag.substr(comma + 1), static_cast<long>(k));
      if (m < 0 || n < 0) throw UsageError("--diag gives a negative size at k=" + std::to_string(k));
      cells.emplace_back(m, n);
    }
    return cells;
  }
  Range mr = parse_range(cfg.m_text, "-m");
  Range nr = parse_range(cfg.n_text, "-n");
  for (std::size_t m = mr.lo; m <= mr.hi; ++m)
    for (std::size_t n = nr.lo; n <= nr.hi; ++n) cells.emplace_back(m, n);
  return cells;
}

void check_grid_guard(const RunConfig& cfg, const std::vector<std::pair<std::size_t, std::size_t>>& cells,
                      std::ostream& err) {
  bool over = cells.size() > kGridCellGuard;
  for (auto [m, n] : cells) over = over || m > kGridSideGuard || n > kGridSideGuard;
  if (!over) return;
  if (!cfg.no_guard)
    throw UsageError("grid exceeds the default guard (" + std::to_string(kGridCellGuard) + " cells, sides <= " +
                     std::to_string(kGridSideGuard) + "); pass --no-guard to run it anyway");
  err << "warning: grid guard overridden, this may take a long time\n";
}

std::string join_breaks(const std::vector<std::size_t>& breaks) {
  std::string s;
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(breaks[i]);
  }
  return s;
}

const char* tf(bool b) { return b ? "true" : "false"; }

void write_rows(const std::vector<ScanRow>& rows, const std::string& format, bool with_coeffs, std::ostream& os) {
  if (format == "json") {
    if (rows.size() == 1 && with_coeffs) {
      os << scan_row_json(rows[0]) << '\n';
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) os << "  " << scan_row_json(rows[i]) << (i + 1 < rows.size() ? ",\n" : "\n");
    os << "]\n";
  } else if (format == "csv") {
    os << "family,m,n,unimodal,log_concave,breaks,tail_ok";
    if (with_coeffs) os << ",coeffs";
    os << '\n';
    for (const auto& r : rows) {
      os << family_id(r.family) << ',' << r.m << ',' << r.n << ',' << tf(r.report.unimodal) << ','
         << tf(r.report.log_concave) << ',' << join_breaks(r.report.breaks) << ',' << tf(r.report.tail_ok);
      if (with_coeffs) {
        os << ',';
        const auto& c = r.poly.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ";" : "") << to_decimal(c[i]);
      }
      os << '\n';
    }
  } else {
    os << std::left << std::setw(10) << "family" << std::setw(5) << "m" << std::setw(5) << "n" << std::setw(10)
       << "unimodal" << std::setw(12) << "log_concave" << std::setw(9) << "tail_ok"
       << "breaks\n";
    for (const auto& r : rows) {
      os << std::setw(10) << family_id(r.family) << std::setw(5) << r.m << std::setw(5) << r.n << std::setw(10)
         << tf(r.report.unimodal) << std::setw(12) << tf(r.report.log_concave) << std::setw(9) << tf(r.report.tail_ok)
         << (r.report.breaks.empty() ? "-" : join_breaks(r.report.breaks)) << '\n';
      if (with_coeffs) os << "  " << r.poly.to_string() << '\n';
    }
  }
}

// Streams go to the -o file when given, else to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : out_(out) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : out_; }

 private:
  std::ostream& out_;
  std::ofstream file_;
};

int cmd_poly(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Family f = parse_family(cfg.family_name);
  std::size_t m = parse_count(cfg.m_text, "-m");
  std::size_t n = parse_count(cfg.n_text, "-n");
  check_grid_guard(cfg, {{m, n}}, err);
  auto rows = scan_cells({{m, n}}, f, cfg.threads);
  Sink sink(cfg.output, out);
  write_rows(rows, cfg.format.empty() ? "json" : cfg.format, true, sink.os());
  return kExitOk;
}

bool row_satisfies(const ScanRow& r, const std::string& what) {
  if (what == "unimodal") return r.report.unimodal;
  if (what == "log-concave") return r.report.log_concave;
  if (what == "non-log-concave") return !r.report.log_concave;
  if (what == "tail-ok") return r.report.tail_ok;
  throw UsageError("unknown --assert '" + what + "' (unimodal, log-concave, non-log-concave, tail-ok)");
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Family f = parse_family(cfg.family_name);
  for (const auto& a : cfg.asserts) row_satisfies(ScanRow{}, a);  // reject bad names before the work
  auto cells = grid_cells(cfg);
  check_grid_guard(cfg, cells, err);
  auto rows = scan_cells(cells, f, cfg.threads);
  {
    Sink sink(cfg.output, out);
    write_rows(rows, cfg.format.empty() ? "csv" : cfg.format, false, sink.os());
  }
  int code = kExitOk;
  for (const auto& a : cfg.asserts)
    for (const auto& r : rows)
      if (!row_satisfies(r, a)) {
        err << "assertion " << a << " fails at " << family_id(r.family) << " m=" << r.m << " n=" << r.n << '\n';
        code = kExitViolation;
      }
  return code;
}

int cmd_plotdata(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Family f = parse_family(cfg.family_name);
  std::size_t m = parse_count(cfg.m_text, "-m");
  std::size_t n = parse_count(cfg.n_text, "-n");
  check_grid_guard(cfg, {{m, n}}, err);
  if (!cfg.format.empty() && cfg.format != "csv") throw UsageError("plotdata writes csv only");
  IntPoly p = indpoly_tree(build_family(f, m, n));
  auto defects = log_concavity_defects(p);
  Sink sink(cfg.output, out);
  auto& os = sink.os();
  os << "k,i_k,defect\n";
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    os << k << ',' << to_decimal(p[k]) << ',' << to_decimal(defects[k]) << '\n';
  return kExitOk;
}

std::size_t audit_vertices(std::size_t m, std::size_t n, bool star) { return 2 * m + 2 * n + 10 + (star ? 2 : 0); }

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format != "json" && format != "table") throw UsageError("verify writes json or table");
  if (cfg.no_guard) err << "warning: size guards overridden, exhaustive runs may take very long\n";

  if (cfg.suite == "theorem") {
    Family f = parse_family(cfg.family_name);
    if (f == Family::Spider2) throw UsageError("the theorem suite runs on t3mn or t3mn-star");
    Range mr = parse_range(cfg.m_text, "-m"), nr = parse_range(cfg.n_text, "-n");
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t m = mr.lo; m <= mr.hi; ++m)
      for (std::size_t n = nr.lo; n <= nr.hi; ++n) cells.emplace_back(m, n);
    check_grid_guard(cfg, cells, err);
    std::vector<TheoremCheck> checks;
    for (auto [m, n] : cells) checks.push_back(verify_theorem(f, m, n));
    Sink sink(cfg.output, out);
    auto& os = sink.os();
    bool ok = true;
    if (format == "json") os << "[\n";
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const auto& t = checks[i];
      ok = ok && t.agree && t.direct_unimodal;
      if (format == "json") {
        os << "  " << theorem_check_json(t) << (i + 1 < checks.size() ? ",\n" : "\n");
      } else {
        os << family_id(t.family) << " m=" << t.m << " n=" << t.n << " covered=" << t.covered
           << " skk>=0=" << tf(t.skk_nonnegative) << " prefix_lc=" << tf(t.prefix_log_concave)
           << " tail_ok=" << tf(t.tail_ok) << " chain=" << tf(t.chain_unimodal)
           << " direct=" << tf(t.direct_unimodal) << (t.agree ? "" : "  DISAGREE") << '\n';
      }
    }
    if (format == "json") os << "]\n";
    return ok ? kExitOk : kExitViolation;
  }

  std::vector<LemmaReport> reports;
  if (cfg.suite == "prop3") {
    std::size_t legs = parse_count(cfg.n_text, "-n");
    if (legs > kSpiderLegGuard && !cfg.no_guard)
      throw UsageError("prop3 is guarded at n <= " + std::to_string(kSpiderLegGuard) + "; pass --no-guard");
    SpiderSuiteOptions opt;
    opt.max_legs = legs;
    opt.forest_legs = legs;
    reports = verify_spider_suite(opt);
  } else if (cfg.suite == "section4" || cfg.suite == "section5") {
    const bool star = cfg.suite == "section5";
    Range mr = parse_range(cfg.m_text, "-m"), nr = parse_range(cfg.n_text, "-n");
    if (mr.lo == 0 || nr.lo == 0) throw UsageError("the pairing audits need m, n >= 1");
    VerifyOptions opt;
    opt.threads = cfg.threads;
    opt.max_vertices = cfg.no_guard ? kAuditVertexHard : kAuditVertexGuard;
    if (!cfg.no_guard && audit_vertices(mr.hi, nr.hi, star) > kAuditVertexGuard)
      throw UsageError("audit is guarded at " + std::to_string(kAuditVertexGuard) +
                       " vertices; pass --no-guard to go further");
    for (std::size_t m = mr.lo; m <= mr.hi; ++m)
      for (std::size_t n = nr.lo; n <= nr.hi; ++n) {
        auto part = star ? verify_section5(m, n, opt) : verify_section4(m, n, opt);
        reports.insert(reports.end(), part.begin(), part.end());
      }
  } else {
    throw UsageError("unknown suite '" + cfg.suite + "' (section4, section5, prop3, theorem)");
  }

  Sink sink(cfg.output, out);
  sink.os() << (format == "json" ? reports_json(reports) + "\n" : reports_table(reports));
  if (!all_ok(reports)) {
    for (const auto& r : reports)
      if (!r.ok()) err << "violation: " << r.lemma << " m=" << r.m << " n=" << r.n << " (" << r.violation_count << ")\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Independence polynomials of T(3,m,n) trees: coefficients, scans and exhaustive audits", "unimodal"};
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "random seed (no current command samples; kept for reproducible configs)")
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads (0: $UNIMODAL_THREADS or hardware)")->capture_default_str();

  auto add_common = [&](CLI::App* sub, const char* format_help) {
    sub->add_option("--family", cfg.family_name, "t3mn, t3mn-star or spider2")->capture_default_str();
    sub->add_option("-m", cfg.m_text, "m, or a range a..b");
    sub->add_option("-n,--n", cfg.n_text, "n, or a range a..b");
    sub->add_option("--format", cfg.format, format_help);
    sub->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
    sub->add_flag("--no-guard", cfg.no_guard, "lift the size guards (prints a warning)");
  };

  auto* poly = app.add_subcommand("poly", "independence polynomial of one tree");
  add_common(poly, "json (default), csv or table");
  auto* scan = app.add_subcommand("scan", "unimodality and log-concavity over a grid");
  add_common(scan, "csv (default), json or table");
  scan->add_option("--diag", cfg.diag, "cells along a diagonal, e.g. k,k+1 (needs -k)");
  scan->add_option("-k", cfg.k_text, "k range for --diag");
  scan->add_option("--assert", cfg.asserts, "unimodal, log-concave, non-log-concave or tail-ok");
  auto* verify = app.add_subcommand("verify", "run an exhaustive verification suite");
  add_common(verify, "json (default) or table");
  verify->add_option("--suite", cfg.suite, "section4, section5, prop3 or theorem")->required();
  auto* plot = app.add_subcommand("plotdata", "(k, i_k, defect) rows for plotting");
  add_common(plot, "csv");

  for (auto* sub : {poly, scan, verify, plot})
    sub->get_option("--format")->check(CLI::IsMember({"json", "csv", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (poly->parsed()) return cmd_poly(cfg, out, err);
    if (scan->parsed()) return cmd_scan(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    return cmd_plotdata(cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace unimodal::cli
