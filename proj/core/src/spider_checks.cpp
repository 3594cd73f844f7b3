#include "unimodal/spider_checks.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>

#include "unimodal/alpha_maps.hpp"
#include "unimodal/graph.hpp"
#include "unimodal/symfunc2.hpp"

namespace unimodal {

namespace {

// Every map S(2^n) -> {0,1,2}, torso first then legs in order.
void for_each_spider_map(std::size_t n, const std::function<void(const SpiderMap&)>& visit) {
  std::vector<unsigned> digits(2 * n + 1, 0);
  SpiderMap s;
  s.legs.resize(n);
  while (true) {
    s.torso = digits[0];
    for (std::size_t j = 0; j < n; ++j) s.legs[j] = {digits[1 + 2 * j], digits[2 + 2 * j]};
    visit(s);
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == 2) digits[i++] = 0;
    if (i == digits.size()) return;
    ++digits[i];
  }
}

std::vector<IndexSet> subsets_of(unsigned k) {
  std::vector<IndexSet> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    IndexSet S;
    for (unsigned j = 0; j < k; ++j)
      if (mask >> j & 1u) S.push_back(j + 1);
    out.push_back(std::move(S));
  }
  return out;
}

std::string set_json(const IndexSet& S) {
  std::string out = "{";
  for (std::size_t i = 0; i < S.size(); ++i) out += (i ? "," : "") + std::to_string(S[i]);
  return out + "}";
}

BivariateSymPoly literal_shadow(const Graph& g, const AlphaMap& a) { return chromatic_multicolor_2var(g, a.values()); }

HomogeneousShadow times(const HomogeneousShadow& a, const HomogeneousShadow& b) {
  if (a.is_zero() || b.is_zero()) return HomogeneousShadow::zero_shadow();
  std::vector<std::int64_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return HomogeneousShadow::from_coeffs(std::move(c));
}

HomogeneousShadow shadow_of(const Graph& g, const AlphaMap& a) {
  if (g.empty()) return HomogeneousShadow::from_coeffs({1});
  ShadowEvaluator ev(g);
  return ev.evaluate(a.values());
}

// The spider maps in A_k for some k >= 3, per leg count.
std::vector<SpiderMap> heavy_members(std::size_t n) {
  std::vector<SpiderMap> out;
  for_each_spider_map(n, [&](const SpiderMap& s) {
    const auto k = A_index(s);
    if (k && *k >= 3) out.push_back(s);
  });
  return out;
}

// Nondecreasing leg-count tuples with entries in [lo, hi], length 1..max_len.
std::vector<std::vector<std::size_t>> leg_tuples(std::size_t max_len, std::size_t lo, std::size_t hi) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_len) return;
    for (std::size_t v = from; v <= hi; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(lo);
  return out;
}

// Walks the forest of spiders with the given leg counts and every choice of
// heavy member per component; visit gets the per-component maps.
void for_each_heavy_forest(std::size_t max_components, std::size_t max_legs,
                           const std::function<void(const Graph&, const std::vector<SpiderMap>&)>& visit) {
  std::map<std::size_t, std::vector<SpiderMap>> members;
  for (std::size_t n = 3; n <= max_legs; ++n) members[n] = heavy_members(n);
  for (const auto& legs : leg_tuples(max_components, 3, max_legs)) {
    std::vector<Graph> parts;
    for (std::size_t n : legs) parts.push_back(build_spider_2(n));
    const Graph forest = disjoint_union(parts);
    std::vector<SpiderMap> pick(legs.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == legs.size()) return visit(forest, pick);
      for (const auto& s : members[legs[i]]) {
        pick[i] = s;
        rec(i + 1);
      }
    };
    rec(0);
  }
}

AlphaMap forest_alpha(const std::vector<SpiderMap>& parts) {
  std::vector<unsigned> v;
  for (const auto& s : parts) {
    const AlphaMap a = spider_to_alpha(s);
    v.insert(v.end(), a.vec().begin(), a.vec().end());
  }
  return AlphaMap(std::move(v));
}

}  // namespace

LemmaReport check_phi_roundtrip(std::size_t max_legs) {
  LemmaReport rep("spider.phi-roundtrip", max_legs, 0);
  for (std::size_t n = 1; n <= max_legs; ++n)
    for_each_spider_map(n, [&](const SpiderMap& s) {
      const auto k = A_index(s);
      if (!k) return;
      for (const auto& S : subsets_of(*k)) {
        ++rep.cases;
        const SpiderMap b = phi_S(s, S);
        if (!in_x_tSn(b, S, *k)) rep.fail(spider_to_alpha(s), "image of " + set_json(S) + " leaves its x set");
        else if (phi_inverse(b) != s) rep.fail(spider_to_alpha(s), "inverse does not undo " + set_json(S));
      }
    });
  return rep;
}

LemmaReport check_phi_injective(std::size_t max_legs) {
  LemmaReport rep("spider.phi-injective", max_legs, 0);
  for (std::size_t n = 1; n <= max_legs; ++n) {
    std::map<SpiderMap, std::pair<SpiderMap, IndexSet>> seen;
    for_each_spider_map(n, [&](const SpiderMap& s) {
      const auto k = A_index(s);
      if (!k) return;
      for (const auto& S : subsets_of(*k)) {
        ++rep.cases;
        const auto [it, fresh] = seen.emplace(phi_S(s, S), std::make_pair(s, S));
        if (!fresh)
          rep.fail(spider_to_alpha(s), "with " + set_json(S) + " collides with " +
                                           spider_to_alpha(it->second.first).to_json() + " and " +
                                           set_json(it->second.second));
      }
    });
  }
  return rep;
}

LemmaReport check_phi_onto(std::size_t max_legs) {
  LemmaReport rep("spider.phi-onto", max_legs, 0);
  for (std::size_t n = 1; n <= max_legs; ++n) {
    const auto all = subsets_of(static_cast<unsigned>(n));
    for_each_spider_map(n, [&](const SpiderMap& b) {
      for (const auto& S : all) {
        const unsigned lo = S.empty() ? 0 : S.back();
        for (unsigned t = lo; t <= n; ++t) {
          if (!in_x_tSn(b, S, t)) continue;
          ++rep.cases;
          const SpiderMap a = phi_inverse(b);
          if (!in_A_k(a, t)) rep.fail(spider_to_alpha(b), "preimage is not in A_" + std::to_string(t));
          else if (phi_S(a, S) != b) rep.fail(spider_to_alpha(b), "preimage maps elsewhere");
        }
      }
    });
  }
  return rep;
}

LemmaReport check_x_disjoint(std::size_t max_legs) {
  LemmaReport rep("spider.x-disjoint", max_legs, 0);
  for (std::size_t n = 1; n <= max_legs; ++n) {
    const auto all = subsets_of(static_cast<unsigned>(n));
    for_each_spider_map(n, [&](const SpiderMap& b) {
      ++rep.cases;
      std::string hits;
      int count = 0;
      for (const auto& S : all) {
        const unsigned lo = S.empty() ? 0 : S.back();
        for (unsigned t = lo; t <= n; ++t)
          if (in_x_tSn(b, S, t)) {
            ++count;
            hits += " " + set_json(S) + "^" + std::to_string(t);
          }
      }
      if (count > 1) rep.fail(spider_to_alpha(b), "in several x sets:" + hits);
    });
  }
  return rep;
}

namespace {

// Torso 1, legs (0,0), (1,0) or (1,1), at least three (1,0) legs.
bool pure_shape(const SpiderMap& s, unsigned& k, unsigned& r) {
  if (s.torso != 1) return false;
  k = r = 0;
  for (auto [h, t] : s.legs) {
    if (h == 1 && t == 0) ++k;
    else if (h == 1 && t == 1) ++r;
    else if (h != 0 || t != 0) return false;
  }
  return k >= 3;
}

}  // namespace

LemmaReport check_pure_shape(std::size_t max_legs) {
  LemmaReport rep("spider.pure-shape", max_legs, 0);
  for (std::size_t n = 3; n <= max_legs; ++n) {
    const Graph g = build_spider_2(n);
    for_each_spider_map(n, [&](const SpiderMap& s) {
      unsigned k, r;
      if (!pure_shape(s, k, r)) return;
      ++rep.cases;
      const BivariateSymPoly expect = schur_poly(r + k, r + 1) - schur_poly(r + k - 1, r + 2);
      if (!(literal_shadow(g, spider_to_alpha(s)) == expect))
        rep.fail(spider_to_alpha(s), "shadow differs from the two-term Schur form");
    });
  }
  return rep;
}

LemmaReport check_pure_shape_bound(std::size_t max_legs) {
  LemmaReport rep("spider.pure-shape-bound", max_legs, 0);
  for (std::size_t n = 3; n <= max_legs; ++n) {
    const Graph g = build_spider_2(n);
    for_each_spider_map(n, [&](const SpiderMap& s) {
      unsigned k, r;
      if (!pure_shape(s, k, r)) return;
      const BivariateSymPoly floor = schur_poly(r + k, r + 1) + schur_poly(r + k - 1, r + 2);
      for (unsigned j = 1; j <= k; ++j) {
        ++rep.cases;
        const BivariateSymPoly img = literal_shadow(g, spider_to_alpha(phi_j(s, j)));
        if (!is_2s_positive(img - floor))
          rep.fail(spider_to_alpha(s), "image under index " + std::to_string(j) + " falls below the bound");
      }
    });
  }
  return rep;
}

LemmaReport check_spider_pairing(std::size_t max_legs) {
  LemmaReport rep("spider.pairing", max_legs, 0);
  for (std::size_t n = 1; n <= max_legs; ++n) {
    const Graph g = build_spider_2(n);
    ShadowEvaluator ev(g);
    for_each_feasible(g, [&](std::span<const unsigned> a) {
      const HomogeneousShadow sa = ev.evaluate(a);
      if (sa.is_2s_positive()) return;
      ++rep.cases;
      const AlphaMap alpha(std::vector<unsigned>(a.begin(), a.end()));
      const SpiderMap s = spider_from_alpha(alpha);
      const auto k = A_index(s);
      if (!k || *k < 3) {
        rep.fail(alpha, "non-positive map outside every A_k with k >= 3");
        return;
      }
      for (unsigned j = 1; j <= *k; ++j)
        if (!sum_is_2s_positive(sa, ev.evaluate(spider_to_alpha(phi_j(s, j)).values())))
          rep.fail(alpha, "sum with image under index " + std::to_string(j) + " is not 2-s-positive");
    });
  }
  return rep;
}

LemmaReport check_short_leg_pairing(std::size_t max_legs) {
  LemmaReport rep("spider.short-leg-pairing", max_legs, 0);
  for (std::size_t n = 1; n <= max_legs; ++n) {
    // v0, u1, w1..wn, w1'..wn': dropping u1 leaves S(2^n) in canonical order.
    const Graph g = build_spider_12(1, n);
    ShadowEvaluator ev(g);
    auto assemble = [&](const SpiderMap& s, unsigned u) {
      const AlphaMap t = spider_to_alpha(s);
      std::vector<unsigned> v{t[0], u};
      v.insert(v.end(), t.vec().begin() + 1, t.vec().end());
      return AlphaMap(std::move(v));
    };
    for_each_spider_map(n, [&](const SpiderMap& s) {
      const auto k = A_index(s);
      if (!k || *k < 2) return;
      for (unsigned u = 0; u <= 2; ++u) {
        const AlphaMap alpha = assemble(s, u);
        const HomogeneousShadow sa = ev.evaluate(alpha.values());
        for (unsigned j = 1; j <= *k; ++j) {
          ++rep.cases;
          const AlphaMap beta = assemble(phi_j(s, j), u);
          if (!sum_is_2s_positive(sa, ev.evaluate(beta.values())))
            rep.fail(alpha, "sum with image under index " + std::to_string(j) + " is not 2-s-positive");
        }
      }
    });
  }
  return rep;
}

LemmaReport check_forest_pairing(std::size_t max_components, std::size_t max_legs) {
  LemmaReport rep("spider.forest-pairing", max_components, max_legs);
  for_each_heavy_forest(max_components, max_legs, [&](const Graph& forest, const std::vector<SpiderMap>& parts) {
    ShadowEvaluator ev(forest);
    const AlphaMap alpha = forest_alpha(parts);
    const HomogeneousShadow sa = ev.evaluate(alpha.values());
    std::vector<SpiderMap> img(parts.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == parts.size()) {
        ++rep.cases;
        if (!sum_is_2s_positive(sa, ev.evaluate(forest_alpha(img).values())))
          rep.fail(alpha, "sum with image " + forest_alpha(img).to_json() + " is not 2-s-positive");
        return;
      }
      const unsigned k = k_count(parts[i]);
      for (unsigned a = 1; a <= k; ++a) {
        img[i] = phi_j(parts[i], a);
        rec(i + 1);
      }
    };
    rec(0);
  });
  return rep;
}

LemmaReport check_forest_subset_pairing(std::size_t max_components, std::size_t max_legs) {
  LemmaReport rep("spider.forest-subset-pairing", max_components, max_legs);
  for_each_heavy_forest(max_components, max_legs, [&](const Graph& forest, const std::vector<SpiderMap>& parts) {
    ShadowEvaluator ev(forest);
    const AlphaMap alpha = forest_alpha(parts);
    const HomogeneousShadow sa = ev.evaluate(alpha.values());
    std::vector<SpiderMap> img(parts.size());
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
      if (i == parts.size()) {
        if (used != parts.size()) return;
        ++rep.cases;
        if (!sum_is_2s_positive(sa, ev.evaluate(forest_alpha(img).values())))
          rep.fail(alpha, "sum with image " + forest_alpha(img).to_json() + " is not 2-s-positive");
        return;
      }
      for (const auto& S : subsets_of(k_count(parts[i]))) {
        if (used + S.size() > parts.size()) continue;
        img[i] = phi_S(parts[i], S);
        rec(i + 1, used + S.size());
      }
    };
    rec(0, 0);
  });
  return rep;
}

LemmaReport check_no_isolated() {
  LemmaReport rep("spider.no-isolated", 0, 0);
  std::vector<Graph> forests;
  for (std::size_t n = 1; n <= 4; ++n) forests.push_back(build_spider_2(n));
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t r = 1; r <= 3; ++r) forests.push_back(build_spider_12(k, r));
  forests.push_back(build_t3mn(1, 1));
  {
    const std::vector<Graph> parts{build_spider_2(2), build_spider_2(3)};
    forests.push_back(disjoint_union(parts));
  }
  {
    const std::vector<Graph> parts{build_spider_12(3, 1), build_path(3)};
    forests.push_back(disjoint_union(parts));
  }
  for (const Graph& f : forests) {
    for_each_feasible(f, [&](std::span<const unsigned> a) {
      const Graph clan = clan_graph(f, a);
      const auto comps = connected_components(clan);
      int bad = 0;
      Bipartition shape;
      bool isolated = false;
      for (const auto& c : comps) {
        const auto bp = bipartition(clan, c);
        if (!bp) return;  // odd cycle: shadow vanishes
        if (bp->p >= bp->q + 2) {
          ++bad;
          shape = *bp;
        }
        if (c.size() == 1) isolated = true;
      }
      if (bad != 1 || shape.p != shape.q + 2 || shape.q < 1) return;
      if (is_2s_positive(chromatic_2var(clan))) return;
      ++rep.cases;
      if (isolated)
        rep.fail(AlphaMap(std::vector<unsigned>(a.begin(), a.end())),
                 "isolated clan vertex next to a (" + std::to_string(shape.p) + "," + std::to_string(shape.q) +
                     ") component");
    });
  }
  return rep;
}

namespace {

std::vector<Graph> small_trees(std::size_t max_vertices) {
  std::vector<Graph> out;
  for (std::size_t n = 1; 2 * n + 1 <= max_vertices; ++n) out.push_back(build_spider_2(n));
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t r = 1; r <= 4; ++r)
      if (1 + k + 2 * r <= max_vertices) out.push_back(build_spider_12(k, r));
  out.push_back(build_path(std::min<std::size_t>(max_vertices, 8)));
  return out;
}

}  // namespace

LemmaReport check_hat_bar(std::size_t max_vertices) {
  LemmaReport rep("spider.hat-bar", max_vertices, 0);
  for (const Graph& g : small_trees(max_vertices)) {
    for_each_feasible(g, [&](std::span<const unsigned> a) {
      const AlphaMap alpha(std::vector<unsigned>(a.begin(), a.end()));
      const BivariateSymPoly whole = literal_shadow(g, alpha);
      for (const auto& comp : connected_components(clan_graph(g, a))) {
        ++rep.cases;
        const HatBarSplit split = hat_bar_split(g, alpha, comp);
        const BivariateSymPoly hat = literal_shadow(induced_subgraph(g, split.hat), restrict(alpha, split.hat));
        const BivariateSymPoly bar = literal_shadow(induced_subgraph(g, split.bar), restrict(alpha, split.bar));
        if (!(hat * bar == whole)) rep.fail(alpha, "shadow does not factor over a hat/bar split");
      }
    });
  }
  return rep;
}

LemmaReport check_hat_bar_reassigned(std::size_t max_vertices) {
  LemmaReport rep("spider.hat-bar-reassigned", max_vertices, 0);
  for (const Graph& g : small_trees(max_vertices)) {
    ShadowEvaluator ev(g);
    for_each_feasible(g, [&](std::span<const unsigned> a) {
      const AlphaMap alpha(std::vector<unsigned>(a.begin(), a.end()));
      for (const auto& comp : connected_components(clan_graph(g, a))) {
        const HatBarSplit split = hat_bar_split(g, alpha, comp);
        const Graph hat_g = induced_subgraph(g, split.hat);
        const HomogeneousShadow bar = shadow_of(induced_subgraph(g, split.bar), restrict(alpha, split.bar));
        ShadowEvaluator hat_ev(hat_g);
        for_each_feasible(hat_g, [&](std::span<const unsigned> b_hat) {
          ++rep.cases;
          AlphaMap beta = alpha;
          for (std::size_t i = 0; i < split.hat.size(); ++i) beta[split.hat[i]] = b_hat[i];
          if (!(ev.evaluate(beta.values()) == times(hat_ev.evaluate(b_hat), bar)))
            rep.fail(beta, "reassigned hat breaks the factorisation for base " + alpha.to_json());
        });
      }
    });
  }
  return rep;
}

std::vector<LemmaReport> verify_spider_suite(const SpiderSuiteOptions& opt) {
  return {check_phi_roundtrip(opt.max_legs),
          check_phi_injective(opt.max_legs),
          check_phi_onto(opt.max_legs),
          check_x_disjoint(opt.max_legs),
          check_pure_shape(opt.max_legs),
          check_pure_shape_bound(opt.max_legs),
          check_spider_pairing(opt.max_legs),
          check_short_leg_pairing(opt.max_legs),
          check_forest_pairing(opt.forest_components, opt.forest_legs),
          check_forest_subset_pairing(opt.forest_components, opt.forest_legs),
          check_no_isolated(),
          check_hat_bar(opt.hat_bar_vertices),
          check_hat_bar_reassigned(opt.reassign_vertices)};
}

}  // namespace unimodal
