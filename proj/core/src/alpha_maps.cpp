#include "unimodal/alpha_maps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace unimodal {

unsigned AlphaMap::sum() const { return std::accumulate(v_.begin(), v_.end(), 0u); }

std::string AlphaMap::to_json() const { return nlohmann::json(v_).dump(); }

AlphaMap restrict(const AlphaMap& a, std::span<const VertexId> vertices) {
  std::vector<VertexId> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<unsigned> out;
  out.reserve(keep.size());
  for (VertexId v : keep) out.push_back(a[v]);
  return AlphaMap(std::move(out));
}

AlphaMap restrict(const AlphaMap& a, const Graph& g, const Graph& h) {
  if (a.size() != g.vertex_count()) throw std::invalid_argument("alpha length mismatch");
  std::vector<unsigned> out;
  for (const auto& label : h.labels()) out.push_back(a[g.index_of(label)]);
  return AlphaMap(std::move(out));
}

AlphaMap extend_zero(const AlphaMap& a_h, const Graph& h, const Graph& g) {
  if (a_h.size() != h.vertex_count()) throw std::invalid_argument("alpha length mismatch");
  AlphaMap out(g.vertex_count());
  for (VertexId v = 0; v < h.vertex_count(); ++v) out[g.index_of(h.label(v))] = a_h[v];
  return out;
}

AlphaMap extend_zero(const AlphaMap& a_h, std::span<const VertexId> vertices, std::size_t n) {
  std::vector<VertexId> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.size() != a_h.size()) throw std::invalid_argument("alpha length mismatch");
  AlphaMap out(n);
  for (std::size_t i = 0; i < keep.size(); ++i) out[keep.at(i)] = a_h[i];
  return out;
}

namespace {

struct FeasibleWalker {
  std::vector<std::vector<VertexId>> earlier;
  std::vector<unsigned> values;
  const std::function<void(std::span<const unsigned>)>* visit = nullptr;
  std::size_t stop = 0;

  explicit FeasibleWalker(const Graph& g) : earlier(g.vertex_count()), values(g.vertex_count(), 0) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      for (VertexId u : g.neighbors(v))
        if (u < v) earlier[v].push_back(u);
  }

  bool allowed(VertexId v, unsigned val) const {
    if (val == 0) return true;
    for (VertexId u : earlier[v]) {
      unsigned w = values[u];
      if (w == 0) continue;
      if (val == 2 || w == 2) return false;
    }
    return true;
  }

  void run(VertexId v) {
    if (v == stop) {
      (*visit)(std::span<const unsigned>(values.data(), stop));
      return;
    }
    for (unsigned val = 0; val <= 2; ++val) {
      if (!allowed(v, val)) continue;
      values[v] = val;
      run(v + 1);
    }
    values[v] = 0;
  }
};

}  // namespace

void for_each_feasible(const Graph& g, const std::function<void(std::span<const unsigned>)>& visit,
                       std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw std::length_error("feasible enumeration limited to " + std::to_string(max_vertices) +
                            " vertices");
  FeasibleWalker w(g);
  w.visit = &visit;
  w.stop = g.vertex_count();
  w.run(0);
}

std::vector<AlphaMap> enumerate_feasible(const Graph& g, std::size_t max_vertices) {
  std::vector<AlphaMap> out;
  for_each_feasible(
      g, [&](std::span<const unsigned> a) { out.emplace_back(std::vector<unsigned>(a.begin(), a.end())); },
      max_vertices);
  return out;
}

std::vector<std::vector<unsigned>> feasible_prefixes(const Graph& g, std::size_t depth) {
  depth = std::min(depth, g.vertex_count());
  FeasibleWalker w(g);
  std::vector<std::vector<unsigned>> out;
  std::function<void(std::span<const unsigned>)> collect = [&](std::span<const unsigned> a) {
    out.emplace_back(a.begin(), a.end());
  };
  w.visit = &collect;
  w.stop = depth;
  w.run(0);
  return out;
}

void for_each_feasible_from(const Graph& g, std::span<const unsigned> prefix,
                            const std::function<void(std::span<const unsigned>)>& visit) {
  FeasibleWalker w(g);
  std::copy(prefix.begin(), prefix.end(), w.values.begin());
  w.visit = &visit;
  w.stop = g.vertex_count();
  w.run(prefix.size());
}

bool is_feasible(const Graph& g, std::span<const unsigned> alpha) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (alpha[v] > 2) return false;
    if (alpha[v] == 0) continue;
    for (VertexId u : g.neighbors(v))
      if (alpha[u] && (alpha[u] == 2 || alpha[v] == 2)) return false;
  }
  return true;
}

BivariateSymPoly y_g_2var_alpha_sum(const Graph& g, std::size_t max_vertices) {
  BivariateSymPoly total;
  for_each_feasible(
      g, [&](std::span<const unsigned> a) { total = total + chromatic_multicolor_2var(g, a); },
      max_vertices);
  return total;
}

namespace {

// x1^p x2^q + x1^q x2^p: the two colourings of a (p, q) clan component.
BivariateSymPoly component_term(unsigned p, unsigned q) { return BivariateSymPoly::orbit_sum(p, q); }

using OpenStates = std::map<std::pair<unsigned, unsigned>, BivariateSymPoly>;

struct Folded {
  BivariateSymPoly zero;  // alpha(v) = 0
  BivariateSymPoly two;   // alpha(v) = 2, a lone K2 block
  OpenStates open;        // alpha(v) = 1, keyed by (v's side, other side)
};

BivariateSymPoly closed_total(const Folded& f) {
  BivariateSymPoly t = f.zero + f.two;
  for (const auto& [pq, poly] : f.open) t = t + poly * component_term(pq.first, pq.second);
  return t;
}

}  // namespace

BivariateSymPoly y_g_2var_component_sum(const Graph& forest) {
  if (!forest.is_forest()) throw std::invalid_argument("y_g_2var_component_sum: not a forest");
  const RootedForest rf = root_forest(forest);
  const std::size_t n = forest.vertex_count();
  std::vector<std::vector<VertexId>> children(n);
  for (VertexId v : rf.order)
    if (rf.parent[v] != v) children[rf.parent[v]].push_back(v);

  std::vector<Folded> fold(n);
  // Children before parents. A value of 3 or more, or a 2 next to anything
  // positive, puts a triangle in the clan graph and contributes nothing.
  for (auto it = rf.order.rbegin(); it != rf.order.rend(); ++it) {
    const VertexId v = *it;
    Folded f;
    f.zero = BivariateSymPoly::one();
    f.two = BivariateSymPoly::monomial(1, 1);
    f.open[{1, 0}] = BivariateSymPoly::one();
    for (VertexId c : children[v]) {
      const Folded& fc = fold[c];
      f.zero = f.zero * closed_total(fc);
      f.two = f.two * fc.zero;
      OpenStates next;
      auto add = [&](std::pair<unsigned, unsigned> key, const BivariateSymPoly& term) {
        auto [pos, fresh] = next.try_emplace(key, term);
        if (!fresh) pos->second = pos->second + term;
      };
      for (const auto& [pq, poly] : f.open) {
        add(pq, poly * fc.zero);
        // c joins v's component on the opposite side.
        for (const auto& [cpq, cpoly] : fc.open) add({pq.first + cpq.second, pq.second + cpq.first}, poly * cpoly);
      }
      f.open = std::move(next);
    }
    fold[v] = std::move(f);
  }

  BivariateSymPoly total = BivariateSymPoly::one();
  for (VertexId v : rf.order)
    if (rf.parent[v] == v) total = total * closed_total(fold[v]);
  return total;
}

// ---- spiders ---------------------------------------------------------------

SpiderLayout spider_layout(std::size_t n) {
  SpiderLayout l;
  l.torso = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    l.heads.push_back(j);
    l.tails.push_back(n + j);
  }
  return l;
}

SpiderMap spider_slice(const AlphaMap& a, const SpiderLayout& layout) {
  SpiderMap s;
  s.torso = a[layout.torso];
  for (std::size_t j = 0; j < layout.heads.size(); ++j)
    s.legs.emplace_back(a[layout.heads[j]], a[layout.tails[j]]);
  return s;
}

void write_spider_slice(AlphaMap& a, const SpiderLayout& layout, const SpiderMap& s) {
  if (s.legs.size() != layout.heads.size()) throw std::invalid_argument("leg count mismatch");
  a[layout.torso] = s.torso;
  for (std::size_t j = 0; j < layout.heads.size(); ++j) {
    a[layout.heads[j]] = s.legs[j].first;
    a[layout.tails[j]] = s.legs[j].second;
  }
}

SpiderMap spider_from_alpha(const AlphaMap& a) {
  if (a.size() % 2 != 1) throw std::invalid_argument("not a map over S(2^n)");
  return spider_slice(a, spider_layout(a.size() / 2));
}

AlphaMap spider_to_alpha(const SpiderMap& s) {
  AlphaMap a(2 * s.legs.size() + 1);
  write_spider_slice(a, spider_layout(s.legs.size()), s);
  return a;
}

unsigned k_count(const SpiderMap& s) {
  unsigned k = 0;
  for (auto [h, t] : s.legs)
    if (h == 1 && t == 0) ++k;
  return k;
}

std::optional<unsigned> A_index(const SpiderMap& s) {
  if (s.torso != 1) return std::nullopt;
  for (auto [h, t] : s.legs)
    if (h > 1 || h + t > 2) return std::nullopt;
  return k_count(s);
}

bool in_A_k(const SpiderMap& s, unsigned k) {
  auto idx = A_index(s);
  return idx && *idx == k;
}

namespace {

void check_index_set(const IndexSet& S, unsigned limit, const char* what) {
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (S[i] < 1 || S[i] > limit) throw std::invalid_argument(std::string(what) + ": index out of range");
    if (i && S[i] <= S[i - 1]) throw std::invalid_argument(std::string(what) + ": set must be strictly increasing");
  }
}

unsigned max_of(const IndexSet& S) { return S.empty() ? 0 : S.back(); }  // max of the empty set is 0

}  // namespace

bool in_x_tSn(const SpiderMap& s, const IndexSet& S, unsigned t) {
  const unsigned n = static_cast<unsigned>(s.legs.size());
  check_index_set(S, n, "in_x_tSn");
  if (t < max_of(S) || t > n) throw std::invalid_argument("in_x_tSn: need max S <= t <= n");
  if (s.torso != 0) return false;
  for (auto [h, tl] : s.legs)
    if (h + tl > 2) return false;
  unsigned pos = 0;
  for (auto [h, tl] : s.legs) {
    if (h < 1 || tl != 0) continue;
    ++pos;
    const bool want2 = std::binary_search(S.begin(), S.end(), pos);
    if (h != (want2 ? 2u : 1u)) return false;
  }
  return pos == t;
}

std::optional<XMembership> x_membership(const SpiderMap& s) {
  if (s.torso != 0) return std::nullopt;
  XMembership m;
  for (auto [h, tl] : s.legs) {
    if (h + tl > 2) return std::nullopt;
    if (h < 1 || tl != 0) continue;
    ++m.t;
    if (h == 2) m.S.push_back(m.t);
  }
  return m;
}

SpiderMap phi_S(const SpiderMap& s, const IndexSet& S) {
  auto k = A_index(s);
  if (!k) throw std::invalid_argument("phi_S: map is not in any A_k");
  check_index_set(S, *k, "phi_S");
  SpiderMap out = s;
  out.torso = 0;
  unsigned pos = 0;
  for (auto& [h, t] : out.legs) {
    if (h != 1 || t != 0) continue;
    ++pos;
    if (std::binary_search(S.begin(), S.end(), pos)) h = 2;
  }
  return out;
}

SpiderMap phi_inverse(const SpiderMap& s) {
  SpiderMap out = s;
  out.torso = 1;
  for (auto& leg : out.legs)
    if (leg.first == 2) leg.first = 1;
  return out;
}

SpiderShape spider_shape(const SpiderMap& s) {
  SpiderShape sh;
  const unsigned a0 = s.torso;
  if (a0 >= 3) sh.zero = true;
  if (a0 == 2) ++sh.blocks;
  std::pair<unsigned, unsigned> torso_comp{1, 0};
  for (auto [h, t] : s.legs) {
    if (h >= 3 || t >= 3) sh.zero = true;
    if (h && t && h + t >= 3) sh.zero = true;
    if (a0 && h && a0 + h >= 3) sh.zero = true;
    const bool attached = (a0 == 1 && h == 1);
    if (attached) {
      ++torso_comp.second;
      if (t == 1) ++torso_comp.first;
      if (t == 2) ++sh.blocks;
      continue;
    }
    if (h == 2) ++sh.blocks;
    if (t == 2) ++sh.blocks;
    if (h == 1 && t == 1) {
      sh.components.emplace_back(1, 1);
    } else {
      if (h == 1) sh.components.emplace_back(1, 0);
      if (t == 1) sh.components.emplace_back(1, 0);
    }
  }
  if (a0 == 1) sh.components.insert(sh.components.begin(), torso_comp);
  for (auto [p, q] : sh.components)
    if (p + q == 1) ++sh.isolated;
  return sh;
}

HomogeneousShadow shadow_from_components(std::span<const std::pair<unsigned, unsigned>> components,
                                         unsigned blocks) {
  if (components.size() > 62) throw std::overflow_error("too many clan components for 64-bit shadow");
  std::vector<std::int64_t> c{1};
  for (auto [p, q] : components) {
    std::vector<std::int64_t> next(c.size() + p + q, 0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + p] += c[j];
      next[j + q] += c[j];
    }
    c = std::move(next);
  }
  // (x1 x2)^blocks
  std::vector<std::int64_t> shifted(c.size() + 2 * blocks, 0);
  std::copy(c.begin(), c.end(), shifted.begin() + blocks);
  return HomogeneousShadow::from_coeffs(std::move(shifted));
}

HomogeneousShadow spider_shadow(const SpiderMap& s) {
  const auto sh = spider_shape(s);
  if (sh.zero) return HomogeneousShadow::zero_shadow();
  return shadow_from_components(sh.components, sh.blocks);
}

SpiderClass classify_spider(const SpiderMap& s) {
  SpiderClass c;
  const auto shadow = spider_shadow(s);
  if (!shadow.is_2s_positive()) {
    c.kind = SpiderKind::NonPositive;
    return c;
  }
  c.membership = x_membership(s);
  if (c.membership && c.membership->S.size() == 1) {
    c.kind = SpiderKind::Singleton;
    c.index = c.membership->S.front();
  } else {
    c.kind = SpiderKind::Zero;
    c.index = 0;
  }
  c.in_Z = spider_shape(s).isolated == 0;
  return c;
}

HatBarSplit hat_bar_split(const Graph& g, const AlphaMap& a, std::span<const VertexId> component) {
  const Graph clan = clan_graph(g, a.values());
  std::vector<VertexId> comp(component.begin(), component.end());
  std::sort(comp.begin(), comp.end());
  const auto comps = connected_components(clan);
  if (std::find(comps.begin(), comps.end(), comp) == comps.end())
    throw std::invalid_argument("hat_bar_split: vertex set is not a clan component");
  std::vector<VertexId> owner;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (unsigned c = 0; c < a[v]; ++c) owner.push_back(v);
  std::vector<char> in_hat(g.vertex_count(), 0);
  for (VertexId cv : comp) in_hat[owner[cv]] = 1;
  HatBarSplit out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) (in_hat[v] ? out.hat : out.bar).push_back(v);
  return out;
}

}  // namespace unimodal
