#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bchrom/coloring.hpp"
#include "bchrom/goodset.hpp"
#include "bchrom/graph.hpp"

namespace bchrom {

/// Link vertices of a good set W: interiors of paths of length 2 or 3 whose
/// endpoints are distinct members of W and whose interior avoids W.
struct LinkStructure {
  std::vector<Vertex> links;  // L
  std::vector<Vertex> l1;     // members of L with a neighbor in L
  std::vector<Vertex> l2;     // members of L with at least two neighbors in W

  std::vector<bool> in_links;
  std::vector<bool> in_l1;
  std::vector<bool> in_l2;
};

LinkStructure classify_links(const Graph& g, const GoodSet& good_set);

struct DerangeTarget {
  Vertex vertex;
  Color forbidden;
};

/// Injective assignment of palette colors to targets such that no target
/// gets its forbidden color: the forbidden colors, followed by the unused
/// palette colors, shifted cyclically by one position.
/// Requires |palette| >= 2, #targets <= |palette|, distinct forbidden colors
/// drawn from the palette, and a palette without repeats; otherwise throws
/// ArgumentError. Result is in target order.
std::vector<std::pair<Vertex, Color>> derange_assign(std::span<const DerangeTarget> targets,
                                                     std::span<const Color> palette);

/// Anchors v_i := i, then Steps 1-4 on the link vertices. Checks after each
/// step that the coloring is proper (P1) and after Step 4 that every anchor
/// has at least as many uncolored neighbors as missing colors (P2); a
/// failed check throws InvariantViolation.
/// Requires girth >= 9 (or a forest) and a good set.
PartialColoring color_links(const Graph& g, const GoodSet& good_set, const LinkStructure& links);

/// Gives every anchor its missing colors on its uncolored neighbors, then
/// colors the remaining uncolored neighbors of degree >= m. Throws
/// InvariantViolation if the uncolored W-neighbors are not a stable set, an
/// anchor runs short of uncolored neighbors, or an anchor ends up without
/// seeing every other color.
PartialColoring complete_b_vertices(const Graph& g, const GoodSet& good_set, PartialColoring pc);

/// Colors every uncolored vertex, in ascending id order, with the smallest
/// color in 1..m missing from its neighborhood. Throws InvariantViolation
/// when no such color exists.
PartialColoring greedy_extend(const Graph& g, PartialColoring pc, std::size_t m);

/// Builds a b-coloring with m(G) colors in which the i-th good-set member
/// (ascending id) is the b-vertex of color i.
/// Throws PreconditionError below girth 9 and ArgumentError when the set is
/// not a good set.
BResult b_coloring_with_good_set(const Graph& g, const GoodSet& good_set);

}  // namespace bchrom
