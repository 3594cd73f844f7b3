#include "unimodal/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace unimodal {

Graph Graph::from_edges(std::vector<std::string> labels, const std::vector<Edge>& edges) {
  Graph g;
  const std::size_t n = labels.size();
  {
    std::unordered_map<std::string, VertexId> seen;
    for (VertexId v = 0; v < n; ++v) {
      if (!seen.emplace(labels[v], v).second)
        throw std::invalid_argument("duplicate vertex label: " + labels[v]);
    }
  }
  g.labels_ = std::move(labels);
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self loop at " + g.labels_[u]);
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("multi-edge in graph");
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<VertexId> Graph::find(const std::string& label) const {
  for (VertexId v = 0; v < labels_.size(); ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

VertexId Graph::index_of(const std::string& label) const {
  auto v = find(label);
  if (!v) throw std::out_of_range("no vertex labelled " + label);
  return *v;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adj_.size(); ++u)
    for (VertexId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;  // already lexicographic: u ascending, neighbor lists sorted
}

bool Graph::is_forest() const {
  return edge_count_ + connected_components(*this).size() == vertex_count();
}

bool Graph::is_tree() const {
  return vertex_count() > 0 && edge_count_ + 1 == vertex_count() &&
         connected_components(*this).size() == 1;
}

std::string Graph::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = vertex_count();
  j["labels"] = labels_;
  auto arr = nlohmann::ordered_json::array();
  for (auto [u, v] : edges()) arr.push_back({u, v});
  j["edges"] = std::move(arr);
  return j.dump();
}

namespace {

std::string leg_label(std::size_t i, std::size_t j, bool prime) {
  std::string s = "v" + std::to_string(i) + std::to_string(j);
  if (prime) s += "'";
  return s;
}

// Appends the legs of one torso: heads first, then tails.
void add_legs(std::vector<std::string>& labels, std::vector<Edge>& edges, VertexId torso,
              std::size_t i, std::size_t count) {
  const VertexId head0 = labels.size();
  for (std::size_t j = 1; j <= count; ++j) labels.push_back(leg_label(i, j, false));
  for (std::size_t j = 1; j <= count; ++j) labels.push_back(leg_label(i, j, true));
  for (std::size_t j = 0; j < count; ++j) {
    edges.emplace_back(torso, head0 + j);
    edges.emplace_back(head0 + j, head0 + count + j);
  }
}

}  // namespace

Graph build_t3mn(std::size_t m, std::size_t n) {
  std::vector<std::string> labels{"v0", "v1", "v2", "v3"};
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}};
  add_legs(labels, edges, 1, 1, 3);
  add_legs(labels, edges, 2, 2, m);
  add_legs(labels, edges, 3, 3, n);
  return Graph::from_edges(std::move(labels), edges);
}

Graph build_t3mn_star(std::size_t m, std::size_t n) {
  Graph base = build_t3mn(m, n);
  auto labels = base.labels();
  auto edges = base.edges();
  const VertexId tail13 = base.index_of("v13'");
  const VertexId x = labels.size();
  labels.push_back("x");
  labels.push_back("y");
  edges.emplace_back(tail13, x);
  edges.emplace_back(x, x + 1);
  return Graph::from_edges(std::move(labels), edges);
}

Graph build_spider_2(std::size_t n) {
  std::vector<std::string> labels{"v0"};
  std::vector<Edge> edges;
  for (std::size_t j = 1; j <= n; ++j) labels.push_back("v" + std::to_string(j));
  for (std::size_t j = 1; j <= n; ++j) labels.push_back("v" + std::to_string(j) + "'");
  for (std::size_t j = 1; j <= n; ++j) {
    edges.emplace_back(0, j);
    edges.emplace_back(j, n + j);
  }
  return Graph::from_edges(std::move(labels), edges);
}

// Own labelling: v0; short legs u1..uk; long legs w1..wr then w1'..wr'.
Graph build_spider_12(std::size_t k, std::size_t r) {
  std::vector<std::string> labels{"v0"};
  std::vector<Edge> edges;
  for (std::size_t j = 1; j <= k; ++j) {
    labels.push_back("u" + std::to_string(j));
    edges.emplace_back(0, j);
  }
  for (std::size_t j = 1; j <= r; ++j) labels.push_back("w" + std::to_string(j));
  for (std::size_t j = 1; j <= r; ++j) labels.push_back("w" + std::to_string(j) + "'");
  for (std::size_t j = 0; j < r; ++j) {
    edges.emplace_back(0, 1 + k + j);
    edges.emplace_back(1 + k + j, 1 + k + r + j);
  }
  return Graph::from_edges(std::move(labels), edges);
}

Graph build_path(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i + 1));
    if (i) edges.emplace_back(i - 1, i);
  }
  return Graph::from_edges(std::move(labels), edges);
}

Graph build_complete(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("k" + std::to_string(i + 1));
    for (std::size_t j = 0; j < i; ++j) edges.emplace_back(j, i);
  }
  return Graph::from_edges(std::move(labels), edges);
}

std::string clan_label(const std::string& owner, unsigned copy) {
  return owner + "^(" + std::to_string(copy) + ")";
}

Graph clan_graph(const Graph& g, std::span<const unsigned> alpha) {
  if (alpha.size() != g.vertex_count())
    throw std::invalid_argument("alpha length does not match vertex count");
  std::vector<std::size_t> first(g.vertex_count() + 1, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) first[v + 1] = first[v] + alpha[v];

  std::vector<std::string> labels;
  labels.reserve(first.back());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (unsigned c = 1; c <= alpha[v]; ++c) labels.push_back(clan_label(g.label(v), c));

  std::vector<Edge> edges;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t a = first[v]; a < first[v + 1]; ++a)
      for (std::size_t b = a + 1; b < first[v + 1]; ++b) edges.emplace_back(a, b);
    for (VertexId u : g.neighbors(v)) {
      if (u <= v) continue;
      for (std::size_t a = first[v]; a < first[v + 1]; ++a)
        for (std::size_t b = first[u]; b < first[u + 1]; ++b) edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(std::move(labels), edges);
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<VertexId> queue;
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    std::vector<VertexId> comp;
    seen[root] = 1;
    queue.push_back(root);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (VertexId u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<Bipartition> bipartition(const Graph& g, std::span<const VertexId> component) {
  if (component.empty()) return Bipartition{0, 0};
  std::vector<int> color(g.vertex_count(), -1);
  std::vector<char> member(g.vertex_count(), 0);
  for (VertexId v : component) member.at(v) = 1;

  std::size_t sides[2] = {0, 0};
  std::deque<VertexId> queue{component.front()};
  color[component.front()] = 0;
  std::size_t reached = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    ++reached;
    ++sides[color[v]];
    for (VertexId u : g.neighbors(v)) {
      if (!member[u]) throw std::invalid_argument("vertex set is not a connected component");
      if (color[u] < 0) {
        color[u] = 1 - color[v];
        queue.push_back(u);
      } else if (color[u] == color[v]) {
        return std::nullopt;
      }
    }
  }
  if (reached != component.size())
    throw std::invalid_argument("vertex set is not a connected component");
  return Bipartition{std::max(sides[0], sides[1]), std::min(sides[0], sides[1])};
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<long> pos(g.vertex_count(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    pos.at(keep[i]) = static_cast<long>(i);
    labels.push_back(g.label(keep[i]));
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (pos[u] >= 0 && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
  return Graph::from_edges(std::move(labels), edges);
}

Graph remove_vertices(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<char> drop(g.vertex_count(), 0);
  for (VertexId v : vertices) drop.at(v) = 1;
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!drop[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const VertexId base = labels.size();
    const std::string prefix = "c" + std::to_string(i + 1) + ":";
    for (const auto& l : parts[i].labels()) labels.push_back(prefix + l);
    for (auto [u, v] : parts[i].edges()) edges.emplace_back(base + u, base + v);
  }
  return Graph::from_edges(std::move(labels), edges);
}

RootedForest root_forest(const Graph& g) {
  RootedForest f;
  f.parent.assign(g.vertex_count(), 0);
  std::vector<char> seen(g.vertex_count(), 0);
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    f.parent[root] = root;
    std::size_t head = f.order.size();
    f.order.push_back(root);
    while (head < f.order.size()) {
      VertexId v = f.order[head++];
      for (VertexId u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          f.parent[u] = v;
          f.order.push_back(u);
        }
    }
  }
  return f;
}

}  // namespace unimodal
