#pragma once

// Test-side reference implementations. They share no code with the library
// beyond the Graph container and the integer types, and favour obviousness
// over speed.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "unimodal/bigint.hpp"
#include "unimodal/graph.hpp"

namespace oracle {

using unimodal::BigInt;
using unimodal::Graph;
using unimodal::VertexId;

// Independent sets counted by size, by walking every vertex subset.
inline std::vector<BigInt> indpoly_subsets(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [u, v] : g.edges()) {
    nbr[u] |= 1u << v;
    nbr[v] |= 1u << u;
  }
  std::vector<BigInt> count(n + 1, 0);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v)
      if ((s >> v & 1u) && (nbr[v] & s)) ok = false;
    if (ok) count[__builtin_popcount(s)] += 1;
  }
  while (count.size() > 1 && count.back() == 0) count.pop_back();
  return count;
}

// Random forest: vertex i > 0 attaches to a uniform earlier vertex with
// probability p_edge, otherwise starts a new tree.
inline Graph random_forest(std::mt19937_64& rng, std::size_t n, double p_edge) {
  std::vector<std::string> labels;
  std::vector<unimodal::Edge> edges;
  std::bernoulli_distribution attach(p_edge);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("v" + std::to_string(i));
    if (i > 0 && attach(rng)) {
      std::uniform_int_distribution<std::size_t> pick(0, i - 1);
      edges.emplace_back(pick(rng), i);
    }
  }
  return Graph::from_edges(labels, edges);
}

inline Graph random_tree(std::mt19937_64& rng, std::size_t n) { return random_forest(rng, n, 1.0); }

// Two-variable polynomial as a plain map (d1, d2) -> coefficient.
using Poly2 = std::map<std::pair<unsigned, unsigned>, BigInt>;

inline void add_to(Poly2& p, unsigned d1, unsigned d2, const BigInt& c) {
  if (c == 0) return;
  BigInt& slot = p[{d1, d2}];
  slot += c;
  if (slot == 0) p.erase({d1, d2});
}

// P(x1) P(x2).
inline Poly2 product_of_univariate(const std::vector<BigInt>& a) {
  Poly2 out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) add_to(out, i, j, a[i] * a[j]);
  return out;
}

// Two-row Schur coefficients by peeling: subtract c * s_(a,b)(x1,x2) for the
// lexicographically largest remaining monomial until nothing is left.
inline std::map<std::pair<unsigned, unsigned>, BigInt> peel_schur(Poly2 f) {
  std::map<std::pair<unsigned, unsigned>, BigInt> out;
  while (!f.empty()) {
    auto top = std::prev(f.end());  // largest d1
    auto [a, b] = top->first;
    BigInt c = top->second;
    if (a < b) return {};  // not symmetric, caller will notice the mismatch
    out[{a, b}] = c;
    // s_(a,b) = sum_{i=b..a} x1^i x2^(a+b-i)
    for (unsigned i = b; i <= a; ++i) add_to(f, i, a + b - i, -c);
  }
  return out;
}

// Two-variable chromatic polynomial by trying all 2-colourings.
inline Poly2 chromatic_two_colours(const Graph& h) {
  const std::size_t n = h.vertex_count();
  Poly2 out;
  const auto edges = h.edges();
  for (std::uint32_t c = 0; c < (1u << n); ++c) {
    bool proper = true;
    for (auto [u, v] : edges)
      if ((c >> u & 1u) == (c >> v & 1u)) {
        proper = false;
        break;
      }
    if (proper) {
      unsigned ones = __builtin_popcount(c);
      add_to(out, static_cast<unsigned>(n) - ones, ones, 1);
    }
  }
  return out;
}

// a_k^2 - a_{k-1} a_{k+1} with zeros outside the support.
inline BigInt defect(const std::vector<BigInt>& a, std::size_t k) {
  auto at = [&](long i) { return i < 0 || i >= static_cast<long>(a.size()) ? BigInt(0) : a[i]; };
  long kk = static_cast<long>(k);
  return at(kk) * at(kk) - at(kk - 1) * at(kk + 1);
}

}  // namespace oracle
