#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace unimodal {

using VertexId = std::size_t;
using Edge = std::pair<VertexId, VertexId>;

// Larger part first.
struct Bipartition {
  std::size_t p = 0;
  std::size_t q = 0;
  bool operator==(const Bipartition&) const = default;
};

class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on loops, duplicate edges, out of range
  // endpoints or duplicate labels.
  static Graph from_edges(std::vector<std::string> labels, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return labels_.empty(); }

  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(v); }
  std::size_t degree(VertexId v) const { return adj_.at(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<VertexId> find(const std::string& label) const;
  VertexId index_of(const std::string& label) const;  // throws if absent

  // (u,v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool is_forest() const;
  bool is_tree() const;

  std::string to_json() const;

  bool operator==(const Graph& other) const {
    return labels_ == other.labels_ && adj_ == other.adj_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

// Tree families and gadgets, all in canonical order.
Graph build_t3mn(std::size_t m, std::size_t n);
Graph build_t3mn_star(std::size_t m, std::size_t n);
Graph build_spider_2(std::size_t n);
Graph build_spider_12(std::size_t k, std::size_t r);
Graph build_path(std::size_t n);
Graph build_complete(std::size_t n);

Graph clan_graph(const Graph& g, std::span<const unsigned> alpha);
std::string clan_label(const std::string& owner, unsigned copy);

std::vector<std::vector<VertexId>> connected_components(const Graph& g);
std::optional<Bipartition> bipartition(const Graph& g, std::span<const VertexId> component);

// Vertices keep their labels; order follows the original canonical order.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);
Graph remove_vertices(const Graph& g, std::span<const VertexId> vertices);

// Labels are prefixed with "c<i>:" to keep them unique.
Graph disjoint_union(std::span<const Graph> parts);

// Parent of every vertex in a BFS forest rooted at the smallest index of each
// component; roots map to themselves. order lists vertices parents-first.
struct RootedForest {
  std::vector<VertexId> order;
  std::vector<VertexId> parent;
};
RootedForest root_forest(const Graph& g);

}  // namespace unimodal
