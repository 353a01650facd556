#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "bchrom/graph.hpp"

namespace bchrom {

/// Length of a shortest cycle, or acyclic (girth +inf) for forests.
struct GirthValue {
  std::optional<std::size_t> length;

  static GirthValue acyclic() { return {}; }
  static GirthValue finite(std::size_t k) { return {k}; }

  bool is_acyclic() const noexcept { return !length.has_value(); }
  /// Forests satisfy every lower bound.
  bool at_least(std::size_t k) const noexcept { return !length || *length >= k; }

  std::string to_string() const { return length ? std::to_string(*length) : "acyclic"; }

  friend bool operator==(const GirthValue&, const GirthValue&) = default;
};

/// Shortest cycle length by BFS from every vertex, O(n·|E|).
GirthValue girth(const Graph& g);

}  // namespace bchrom
