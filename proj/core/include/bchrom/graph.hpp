#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bchrom {

/// Dense 0-based internal vertex id.
using Vertex = std::size_t;
/// External vertex name as it appears in input files.
using Label = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph.
///
/// Adjacency lists are strictly increasing and symmetric. Every vertex keeps
/// the label it was read with; internal ids are assigned in ascending label
/// order, so "smallest id" and "smallest label" tie-break identically.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on vertices 0..n-1 labeled by their ids.
  /// Throws ArgumentError on self-loops, duplicate edges or ids >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  /// Builds a graph over the given labels; edges refer to positions in
  /// `labels`. Labels must be distinct.
  static Graph from_labeled_edges(std::vector<Label> labels, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  bool empty() const noexcept { return adjacency_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  Label label(Vertex v) const { return labels_.at(v); }
  std::span<const Label> labels() const noexcept { return labels_; }
  std::optional<Vertex> find(Label label) const;

  /// Edges (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Label> labels_;
  std::size_t edge_count_ = 0;
};

/// N(u) ∩ X, sorted. Throws ArgumentError if u or a member of X is unknown.
std::vector<Vertex> restricted_neighbors(const Graph& g, Vertex u, std::span<const Vertex> subset);

/// Same as above with X given as a membership mask of size g.order().
std::vector<Vertex> restricted_neighbors(const Graph& g, Vertex u, const std::vector<bool>& mask);

/// Membership mask of `subset` over the vertices of `g`.
std::vector<bool> membership_mask(const Graph& g, std::span<const Vertex> subset);

}  // namespace bchrom
