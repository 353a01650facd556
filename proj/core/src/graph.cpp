#include "bchrom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bchrom/errors.hpp"

namespace bchrom {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw ArgumentError("unknown vertex id " + std::to_string(v));
  }
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), Label{0});
  return from_labeled_edges(std::move(labels), edges);
}

Graph Graph::from_labeled_edges(std::vector<Label> labels, std::span<const Edge> edges) {
  const std::size_t n = labels.size();

  // Re-index so that ids follow ascending label order.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return labels[a] < labels[b]; });
  std::vector<Vertex> rank(n);
  for (Vertex i = 0; i < n; ++i) {
    rank[order[i]] = i;
    if (i > 0 && labels[order[i]] == labels[order[i - 1]]) {
      throw ArgumentError("duplicate vertex label " + std::to_string(labels[order[i]]));
    }
  }

  Graph g;
  g.labels_.resize(n);
  for (Vertex i = 0; i < n; ++i) g.labels_[i] = labels[order[i]];
  g.adjacency_.assign(n, {});

  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw ArgumentError("edge endpoint out of range");
    }
    if (a == b) {
      throw ArgumentError("self-loop at vertex " + std::to_string(labels[a]));
    }
    g.adjacency_[rank[a]].push_back(rank[b]);
    g.adjacency_[rank[b]].push_back(rank[a]);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    auto dup = std::adjacent_find(adj.begin(), adj.end());
    if (dup != adj.end()) {
      throw ArgumentError("duplicate edge " + std::to_string(g.labels_[v]) + " " +
                          std::to_string(g.labels_[*dup]));
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<Vertex> Graph::find(Label label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<bool> membership_mask(const Graph& g, std::span<const Vertex> subset) {
  std::vector<bool> mask(g.order(), false);
  for (Vertex v : subset) {
    check_vertex(g, v);
    mask[v] = true;
  }
  return mask;
}

std::vector<Vertex> restricted_neighbors(const Graph& g, Vertex u, std::span<const Vertex> subset) {
  check_vertex(g, u);
  return restricted_neighbors(g, u, membership_mask(g, subset));
}

std::vector<Vertex> restricted_neighbors(const Graph& g, Vertex u, const std::vector<bool>& mask) {
  check_vertex(g, u);
  if (mask.size() != g.order()) {
    throw ArgumentError("membership mask size does not match the graph");
  }
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(u)) {
    if (mask[w]) out.push_back(w);
  }
  return out;
}

}  // namespace bchrom
