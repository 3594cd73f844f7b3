#include <stdexcept>

#include "unimodal/proof_check.hpp"

namespace unimodal {

TreeLayout tree_layout(std::size_t m, std::size_t n, bool star) {
  if (m < 1 || n < 1) throw std::invalid_argument("tree_layout: m and n must be >= 1");
  TreeLayout L;
  L.m = m;
  L.n = n;
  L.star = star;
  L.root = 0;
  const std::array<std::size_t, 4> legs{0, 3, m, n};
  VertexId next = 4;
  for (int i = 1; i <= 3; ++i) {
    L.torso[i] = static_cast<VertexId>(i);
    L.G[i].torso = L.torso[i];
    for (std::size_t j = 0; j < legs[i]; ++j) L.G[i].heads.push_back(next + j);
    for (std::size_t j = 0; j < legs[i]; ++j) L.G[i].tails.push_back(next + legs[i] + j);
    next += 2 * legs[i];
  }
  L.tree_vertices = next;
  L.vertex_count = next;
  if (star) {
    L.x = next;
    L.y = next + 1;
    L.vertex_count = next + 2;
  }
  return L;
}

TreeView make_view(const TreeLayout& layout, AlphaMap alpha, bool positive) {
  if (alpha.size() != layout.tree_vertices) throw std::invalid_argument("make_view: size mismatch");
  TreeView v;
  v.layout = &layout;
  v.alpha = std::move(alpha);
  v.positive = positive;
  v.sum = v.alpha.sum();
  for (int i = 1; i <= 3; ++i) {
    v.slice[i] = spider_slice(v.alpha, layout.G[i]);
    v.cls[i] = classify_spider(v.slice[i]);
    v.k[i] = k_count(v.slice[i]);
  }
  return v;
}

}  // namespace unimodal
