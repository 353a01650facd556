#pragma once

#include <cstddef>
#include <cstdint>

#include "bchrom/graph.hpp"

namespace bchrom {

/// Random graph on `n` vertices (labels 0..n-1) whose girth is at least
/// `min_girth` or which is a forest.
///
/// Edges are proposed uniformly at random and accepted only when the cycle
/// they would close is long enough. Generation stops once `edge_budget`
/// edges are accepted or after a run of consecutive rejections, so fewer
/// edges than budgeted may come back. Deterministic for a fixed seed.
/// Throws ArgumentError when min_girth < 3.
Graph generate_girth_constrained(std::size_t n, std::size_t min_girth, std::size_t edge_budget,
                                 std::uint64_t seed);

/// Uniform random labeled tree on n vertices (Prüfer decoding).
Graph random_tree(std::size_t n, std::uint64_t seed);

}  // namespace bchrom
