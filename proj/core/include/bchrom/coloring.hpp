#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bchrom/graph.hpp"

namespace bchrom {

/// Colors are 1..k; 0 marks an uncolored vertex.
using Color = int;
inline constexpr Color kUncolored = 0;

/// Vertex-indexed color assignment.
using Coloring = std::vector<Color>;

/// Which phase of the good-set construction assigned a color.
enum class Step { anchor, step1, step2, step3_new, step3_recolor, step4, completion, greedy };

std::string_view step_name(Step step);

struct ColorEvent {
  Step step;
  Vertex vertex;
  Color color;
  /// Previous color for recolorings, kUncolored otherwise.
  Color previous = kUncolored;
};

/// Color assignment under construction, with a log of every assignment.
class PartialColoring {
 public:
  PartialColoring() = default;
  explicit PartialColoring(std::size_t n) : colors_(n, kUncolored), recolors_(n, 0) {}

  std::size_t order() const noexcept { return colors_.size(); }
  Color color(Vertex v) const { return colors_.at(v); }
  bool colored(Vertex v) const { return colors_.at(v) != kUncolored; }
  bool total() const;
  /// How many times v's color was replaced after its first assignment.
  std::size_t recolor_count(Vertex v) const { return recolors_.at(v); }

  void assign(Vertex v, Color c, Step step);

  const Coloring& colors() const noexcept { return colors_; }
  std::span<const ColorEvent> events() const noexcept { return events_; }

 private:
  Coloring colors_;
  std::vector<std::size_t> recolors_;
  std::vector<ColorEvent> events_;
};

/// A b-coloring with its basis: basis[c - 1] is a b-vertex of color c.
struct BResult {
  std::size_t chi_b = 0;
  Coloring coloring;
  std::vector<Vertex> basis;
  /// Assignment log when produced by the construction; empty otherwise.
  std::vector<ColorEvent> trace;
};

/// One line per event: "step=<tag> vertex=<label> color=<c> [recolored-from=<c'>]".
std::string format_trace(const Graph& g, std::span<const ColorEvent> events);

}  // namespace bchrom
