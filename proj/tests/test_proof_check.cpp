#include <doctest.h>

#include <algorithm>

#include "unimodal/proof_check.hpp"
#include "unimodal/spider_checks.hpp"

using namespace unimodal;

namespace {

bool shadow_positive(const Graph& g, const AlphaMap& a) {
  ShadowEvaluator ev(g);
  return ev.is_2s_positive(a.values());
}

std::vector<std::string> failing(const std::vector<LemmaReport>& reports) {
  std::vector<std::string> out;
  for (const auto& r : reports)
    if (!r.ok()) out.push_back(r.lemma);
  return out;
}

}  // namespace

TEST_CASE("tree layout indices") {
  TreeLayout l = tree_layout(2, 1, true);
  CHECK(l.tree_vertices == 16);
  CHECK(l.vertex_count == 18);
  CHECK(l.root == 0);
  CHECK(l.torso[1] == 1);
  CHECK(l.torso[3] == 3);
  CHECK(l.G[1].heads == std::vector<VertexId>{4, 5, 6});
  CHECK(l.G[1].tails == std::vector<VertexId>{7, 8, 9});
  CHECK(l.G[2].heads == std::vector<VertexId>{10, 11});
  CHECK(l.G[3].tails == std::vector<VertexId>{15});
  CHECK(l.v13() == 6);
  CHECK(l.v13p() == 9);
  CHECK(l.x == 16);
  CHECK(l.y == 17);
  CHECK(l.legs(2) == 2);
  CHECK_THROWS(tree_layout(0, 1));
  Graph g = build_t3mn_star(2, 1);
  CHECK(g.index_of("v13'") == l.v13p());
  CHECK(g.index_of("v22") == l.head(2, 2));
}

TEST_CASE("view slices and leg counts") {
  TreeLayout l = tree_layout(1, 1);
  AlphaMap a{1, 1, 0, 1, 0, 1, 1, 0, 0, 0, 2, 0, 1, 0};
  TreeView v = make_view(l, a, false);
  CHECK(v.root() == 1);
  CHECK(v.torso(2) == 0);
  CHECK(v.k[1] == 2);
  CHECK(v.k[3] == 1);
  CHECK(v.sum == a.sum());
  CHECK(v.slice[2].legs == std::vector<std::pair<unsigned, unsigned>>{{2, 0}});
}

TEST_CASE("tree audit is clean on the smallest member") {
  auto reports = verify_section4(1, 1);
  CHECK(failing(reports).empty());
  const LemmaReport* part = find_report(reports, "tree.partition");
  REQUIRE(part);
  CHECK(part->cases == 596);
  const LemmaReport* stanley = find_report(reports, "tree.stanley-identity");
  REQUIRE(stanley);
  CHECK(stanley->cases == 121165);
}

TEST_CASE("tree audit at (1,2): only the target-class overlap is flagged") {
  auto reports = verify_section4(1, 2);
  CHECK(failing(reports) == std::vector<std::string>{"tree.class-disjoint"});
  const LemmaReport* r = find_report(reports, "tree.class-disjoint");
  REQUIRE(r);
  REQUIRE_FALSE(r->violations.empty());
  CHECK(r->violations[0].reason.find("10 16") != std::string::npos);
}

TEST_CASE("an image of class 10 satisfies the class 16 target predicate too") {
  TreeLayout l = tree_layout(1, 2);
  Graph g = build_t3mn(1, 2);
  AlphaMap a{1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 2, 2, 0, 0};
  REQUIRE(is_feasible(g, a.values()));
  REQUIRE_FALSE(shadow_positive(g, a));
  TreeView v = make_view(l, a, false);
  CHECK(N_labels(v) == std::vector<int>{10});
  AlphaMap b = apply_psi(10, v);
  CHECK(b == AlphaMap{1, 0, 0, 0, 0, 2, 1, 0, 0, 0, 0, 0, 2, 2, 0, 0});
  TreeView w = make_view(l, b, shadow_positive(g, b));
  CHECK(w.positive);
  CHECK(M_labels(w) == std::vector<int>{10, 16});
}

TEST_CASE("class 19 map can raise v13") {
  TreeLayout l = tree_layout(1, 1);
  Graph g = build_t3mn(1, 1);
  AlphaMap a{1, 1, 0, 1, 0, 1, 1, 0, 0, 0, 2, 0, 1, 0};
  REQUIRE_FALSE(shadow_positive(g, a));
  TreeView v = make_view(l, a, false);
  CHECK(N_labels(v) == std::vector<int>{19});
  AlphaMap b = apply_psi(19, v);
  CHECK(b == AlphaMap{2, 0, 0, 0, 0, 1, 2, 0, 0, 0, 2, 0, 1, 0});
  CHECK(a[l.v13()] == 1);
  CHECK(b[l.v13()] == 2);
  CHECK_FALSE(in_N28_bar(v));
}

TEST_CASE("on the extended tree that raise makes the partner vanish") {
  TreeLayout l = tree_layout(1, 1, true);
  Graph g = build_t3mn_star(1, 1);
  // v13' = 1, x = 1, y = 0
  AlphaMap a{1, 1, 0, 1, 0, 1, 1, 0, 0, 1, 2, 0, 1, 0, 1, 0};
  ShadowEvaluator ev(g);
  REQUIRE_FALSE(ev.is_2s_positive(a.values()));
  AlphaMap b{2, 0, 0, 0, 0, 1, 2, 0, 0, 1, 2, 0, 1, 0, 1, 0};
  // v13 = 2 next to v13' = 1 puts a triangle in the clan graph.
  CHECK_FALSE(is_feasible(g, b.values()));
  CHECK(ev.evaluate(b.values()).is_zero());
  CHECK_FALSE(sum_is_2s_positive(ev.evaluate(a.values()), ev.evaluate(b.values())));
}

TEST_CASE("extended-tree audit at (1,1)") {
  auto reports = verify_section5(1, 1);
  CHECK(failing(reports) == std::vector<std::string>{"star.pairing", "star.inner-v13-monotone"});
  for (const char* name : {"star.path-append-zero", "star.path-append-two", "star.path-append-pair",
                           "star.path-append-open", "star.inner-keeps-v13p", "star.injective",
                           "star.keeps-x-y-v13p", "star.y-skk"}) {
    const LemmaReport* r = find_report(reports, name);
    REQUIRE(r);
    CHECK(r->ok());
    CHECK(r->cases > 0);
  }
  const LemmaReport* pairing = find_report(reports, "star.pairing");
  REQUIRE(pairing);
  CHECK(pairing->violation_count == 6);
  for (const auto& v : pairing->violations) CHECK(v.reason.find("via class 19") != std::string::npos);
}

TEST_CASE("extended classes") {
  TreeLayout l = tree_layout(1, 1, true);
  Graph g = build_t3mn_star(1, 1);
  Graph t = build_t3mn(1, 1);
  ShadowEvaluator ev(g), tev(t);
  std::size_t seen = 0;
  for_each_feasible(g, [&](std::span<const unsigned> s) {
    if (ev.is_2s_positive(s)) return;
    AlphaMap a(std::vector<unsigned>(s.begin(), s.end()));
    AlphaMap tree_part(std::vector<unsigned>(s.begin(), s.begin() + l.tree_vertices));
    StarView v = make_star_view(l, a, false, tev.is_2s_positive(tree_part.values()));
    int hits = 0;
    for (int i = 1; i <= 4; ++i) hits += in_Nprime_class(i, v);
    CHECK(hits == 1);
    if (v.ax != 1) CHECK((in_Nprime_class(1, v) || in_Nprime_class(4, v)));
    ++seen;
  });
  CHECK(seen > 0);
}

TEST_CASE("the headline chain agrees with the direct verdict") {
  for (auto f : {Family::T3mn, Family::T3mnStar})
    for (std::size_t m = 0; m <= 6; ++m)
      for (std::size_t n = 0; n <= 6; ++n) {
        TheoremCheck t = verify_theorem(f, m, n);
        CHECK(t.agree);
        CHECK(t.direct_unimodal);
        CHECK(t.skk_matches_defects);
        CHECK(t.covered == m + n + 4);
      }
  CHECK_THROWS(verify_theorem(Family::Spider2, 0, 3));
  std::string j = theorem_check_json(verify_theorem(Family::T3mn, 1, 1));
  CHECK(j.find("\"agree\":true") != std::string::npos);
}

TEST_CASE("spider suite is clean on three legs") {
  SpiderSuiteOptions opt;
  opt.max_legs = 3;
  opt.forest_legs = 3;
  opt.hat_bar_vertices = 7;
  opt.reassign_vertices = 6;
  auto reports = verify_spider_suite(opt);
  CHECK(reports.size() == 13);
  CHECK(failing(reports).empty());
}

TEST_CASE("reports serialise deterministically and ignore timing") {
  VerifyOptions one, many;
  one.threads = 1;
  many.threads = 3;
  auto a = verify_section4(1, 1, one);
  auto b = verify_section4(1, 1, many);
  b[0].elapsed_ms = 12345;
  CHECK(reports_json(a) == reports_json(b));
}

TEST_CASE("violation cap keeps the full count") {
  LemmaReport r("demo");
  for (int i = 0; i < 10; ++i) r.fail(AlphaMap{static_cast<unsigned>(i)}, "bad", 3);
  CHECK(r.violation_count == 10);
  CHECK(r.violations.size() == 3);
  LemmaReport s("demo");
  s.merge(r, 5);
  CHECK(s.violation_count == 10);
  CHECK(s.violations.size() == 3);
  CHECK_FALSE(s.ok());
  std::string j = report_json(r);
  CHECK(j.find("\"violation_count\":10") != std::string::npos);
}

TEST_CASE("audits refuse trees beyond the vertex limit") {
  VerifyOptions opt;
  opt.max_vertices = 16;
  CHECK_THROWS_AS(verify_section4(2, 2, opt), std::length_error);
}
