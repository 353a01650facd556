#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bchrom/coloring.hpp"
#include "bchrom/graph.hpp"

namespace bchrom::cli {

/// Contents of a coloring file:
///
///     # k=<k> basis=<label>:<color>,...
///     <label> <color>
///     ...
struct ColoringFile {
  std::size_t k = 0;
  /// (vertex, color) pairs from the header.
  std::vector<std::pair<Vertex, Color>> basis;
  Coloring coloring;
};

std::string write_coloring(const Graph& g, const BResult& result);

/// Resolves labels against `g`. Throws ParseError on a missing or malformed
/// header, unknown labels, repeated vertices or a coloring that is not total.
ColoringFile parse_coloring(const Graph& g, std::string_view text);

}  // namespace bchrom::cli
