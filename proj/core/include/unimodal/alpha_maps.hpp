#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unimodal/graph.hpp"
#include "unimodal/symfunc2.hpp"

namespace unimodal {

class AlphaMap {
 public:
  AlphaMap() = default;
  explicit AlphaMap(std::size_t n) : v_(n, 0) {}
  explicit AlphaMap(std::vector<unsigned> values) : v_(std::move(values)) {}
  AlphaMap(std::initializer_list<unsigned> values) : v_(values) {}

  std::size_t size() const { return v_.size(); }
  unsigned operator[](std::size_t i) const { return v_[i]; }
  unsigned& operator[](std::size_t i) { return v_[i]; }
  std::span<const unsigned> values() const { return v_; }
  const std::vector<unsigned>& vec() const { return v_; }
  unsigned sum() const;

  auto operator<=>(const AlphaMap&) const = default;
  bool operator==(const AlphaMap&) const = default;

  std::string to_json() const;

 private:
  std::vector<unsigned> v_;
};

// alpha restricted to the listed vertices (ascending vertex order, which is
// the order induced_subgraph uses).
AlphaMap restrict(const AlphaMap& a, std::span<const VertexId> vertices);
// Label based variant: h must be an induced subgraph of g.
AlphaMap restrict(const AlphaMap& a, const Graph& g, const Graph& h);
// Zero padding of a map over h back to g.
AlphaMap extend_zero(const AlphaMap& a_h, const Graph& h, const Graph& g);
AlphaMap extend_zero(const AlphaMap& a_h, std::span<const VertexId> vertices, std::size_t n);

inline constexpr std::size_t kFeasibleMaxVertices = 24;

// Visits every alpha with values <= 2 such that an edge with both ends
// positive is (1,1) and a vertex of value 2 has only zero neighbours.
// Depth first over the canonical order, values tried 0, 1, 2.
void for_each_feasible(const Graph& g, const std::function<void(std::span<const unsigned>)>& visit,
                       std::size_t max_vertices = kFeasibleMaxVertices);
std::vector<AlphaMap> enumerate_feasible(const Graph& g,
                                         std::size_t max_vertices = kFeasibleMaxVertices);

// Splitting support: all feasible assignments to the first `depth` vertices,
// and completion of one such prefix.
std::vector<std::vector<unsigned>> feasible_prefixes(const Graph& g, std::size_t depth);
void for_each_feasible_from(const Graph& g, std::span<const unsigned> prefix,
                            const std::function<void(std::span<const unsigned>)>& visit);

bool is_feasible(const Graph& g, std::span<const unsigned> alpha);

// Sum of the literal multicolour shadows over the feasible stream.
BivariateSymPoly y_g_2var_alpha_sum(const Graph& g, std::size_t max_vertices = kFeasibleMaxVertices);
// The same sum for a forest, folded up the tree: per vertex it keeps the
// (own side, other side) sizes of the still open clan component instead of
// listing every alpha. No size limit.
BivariateSymPoly y_g_2var_component_sum(const Graph& forest);

// ---- spiders S(2^n) ------------------------------------------------------

using IndexSet = std::vector<unsigned>;  // sorted, 1-based

// alpha on S(2^n): torso value and (head, tail) per leg in leg order.
struct SpiderMap {
  unsigned torso = 0;
  std::vector<std::pair<unsigned, unsigned>> legs;
  auto operator<=>(const SpiderMap&) const = default;
  std::size_t leg_count() const { return legs.size(); }
};

// Where a spider sits inside a bigger graph.
struct SpiderLayout {
  VertexId torso = 0;
  std::vector<VertexId> heads;
  std::vector<VertexId> tails;
};

SpiderLayout spider_layout(std::size_t n);  // canonical layout of S(2^n)
SpiderMap spider_slice(const AlphaMap& a, const SpiderLayout& layout);
void write_spider_slice(AlphaMap& a, const SpiderLayout& layout, const SpiderMap& s);
SpiderMap spider_from_alpha(const AlphaMap& a);  // a over S(2^n)
AlphaMap spider_to_alpha(const SpiderMap& s);

// #{j : head = 1, tail = 0}
unsigned k_count(const SpiderMap& s);
bool in_A_k(const SpiderMap& s, unsigned k);
std::optional<unsigned> A_index(const SpiderMap& s);  // k when s lies in some A_k

// Throws std::invalid_argument unless S within {1..n} and max S <= t <= n.
bool in_x_tSn(const SpiderMap& s, const IndexSet& S, unsigned t);

struct XMembership {
  IndexSet S;
  unsigned t = 0;
  bool operator==(const XMembership&) const = default;
};
// The unique (S, t) with s in x^t_{S,n}, if any.
std::optional<XMembership> x_membership(const SpiderMap& s);

// Throws std::invalid_argument unless s lies in A_k and S within {1..k}.
SpiderMap phi_S(const SpiderMap& s, const IndexSet& S);
inline SpiderMap phi_j(const SpiderMap& s, unsigned j) { return phi_S(s, IndexSet{j}); }
SpiderMap phi_inverse(const SpiderMap& s);

struct SpiderShape {
  std::vector<std::pair<unsigned, unsigned>> components;  // (p, q) per alpha=1 component
  unsigned blocks = 0;                                    // K2 blocks from value 2
  unsigned isolated = 0;                                  // (1,0) components
  bool zero = false;                                      // some clan triangle
};
SpiderShape spider_shape(const SpiderMap& s);
HomogeneousShadow spider_shadow(const SpiderMap& s);
HomogeneousShadow shadow_from_components(std::span<const std::pair<unsigned, unsigned>> components,
                                         unsigned blocks);

enum class SpiderKind { NonPositive, Singleton, Zero };

struct SpiderClass {
  SpiderKind kind = SpiderKind::Zero;
  std::optional<XMembership> membership;  // the unique x^t_{S,n} containing it
  unsigned index = 0;                     // j for X_{j,n}, 0 for X_{0,n}
  bool in_Z = false;                      // 2-s-positive, no isolated clan vertex
};
SpiderClass classify_spider(const SpiderMap& s);

// ---- hat / bar ----------------------------------------------------------

struct HatBarSplit {
  std::vector<VertexId> hat;
  std::vector<VertexId> bar;
};

// component: vertex indices of clan_graph(g, a) forming one component.
// Throws std::invalid_argument when it is not a component.
HatBarSplit hat_bar_split(const Graph& g, const AlphaMap& a, std::span<const VertexId> component);

}  // namespace unimodal
