#pragma once

#include <cstddef>
#include <vector>

#include "bchrom/graph.hpp"

namespace bchrom {

/// m(G) together with the dense vertices M(G) = { u : d(u) >= m(G) - 1 }.
struct DensityProfile {
  /// Largest k such that at least k vertices have degree >= k - 1.
  std::size_t m = 0;
  /// Sorted ascending.
  std::vector<Vertex> dense;

  bool is_dense(Vertex v) const;
};

/// Throws ArgumentError for the empty graph.
DensityProfile density_profile(const Graph& g);

}  // namespace bchrom
