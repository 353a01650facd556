#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bchrom/graph.hpp"

namespace bchrom {

enum class GraphFormat { edge_list, dimacs };

/// Parses the edge-list text format.
///
///     # comment
///     # n=<count>      optional; total vertex count
///     u v              one edge per line, nonnegative integer labels
///     u                a lone label declares a vertex
///
/// When `# n=` exceeds the number of labels seen, the remaining vertices
/// take the smallest unused nonnegative labels.
/// Throws ParseError (with line number) on malformed input, self-loops and
/// duplicate edges.
Graph parse_edge_list(std::string_view text);

/// Parses DIMACS ".col": `c` comments, one `p edge <n> <m>` line and
/// `e <u> <v>` lines with labels in 1..n.
Graph parse_dimacs(std::string_view text);

/// Serializes in the edge-list format; parse_edge_list(write_edge_list(g)) == g.
std::string write_edge_list(const Graph& g);

GraphFormat format_from_path(const std::filesystem::path& path);
GraphFormat parse_format_name(std::string_view name);

/// Reads a file in the given format. Throws Error if it cannot be opened.
Graph read_graph_file(const std::filesystem::path& path, GraphFormat format);

/// Whole-file read; throws Error on failure.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace bchrom
