#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bchrom/coloring.hpp"
#include "bchrom/graph.hpp"

namespace bchrom {

struct Violation {
  enum class Kind { monochromatic_edge, class_without_b_vertex, color_gap };

  Kind kind;
  /// Edge endpoints for monochromatic_edge; the offending vertex for an
  /// out-of-range color; empty otherwise.
  std::vector<Vertex> vertices;
  Color color = kUncolored;
};

std::string_view kind_name(Violation::Kind kind);

struct ValidityReport {
  bool proper = true;
  std::size_t colors_used = 0;
  /// basis[c - 1] is a b-vertex of color c. Present iff the coloring is a
  /// b-coloring with exactly the colors 1..k.
  std::optional<std::vector<Vertex>> basis;
  std::vector<Violation> violations;

  bool valid() const noexcept { return basis.has_value(); }
  /// Violations rendered one per line with vertex labels.
  std::string summary(const Graph& g) const;
};

/// True iff v has a neighbor of every color in 1..k other than its own.
bool is_b_vertex(const Graph& g, std::span<const Color> coloring, Vertex v, std::size_t k);

/// Checks properness, that the used colors are exactly 1..k, and that each
/// class has a b-vertex (the smallest such id is reported).
/// Throws ArgumentError if the coloring is not total on V(G).
ValidityReport check_b_coloring(const Graph& g, std::span<const Color> coloring, std::size_t k);

struct OracleOptions {
  /// Graphs with more vertices are refused with OracleLimitError.
  std::size_t vertex_limit = 14;
  /// Skip candidate bases of size m(G) that encircle a vertex; such sets are
  /// never the basis of a b-coloring with m(G) colors.
  bool encirclement_prune = true;
};

/// Exhaustive search for a b-coloring with exactly k colors: enumerate
/// candidate bases among vertices of degree >= k-1 and backtrack over the
/// rest, checking that each basis vertex can still see every other color.
std::optional<Coloring> find_b_coloring_exact(const Graph& g, std::size_t k,
                                              const OracleOptions& options = {});

/// Largest k <= m(G) admitting a b-coloring, scanning down from m(G).
std::size_t exact_b_chromatic(const Graph& g, const OracleOptions& options = {});

}  // namespace bchrom
