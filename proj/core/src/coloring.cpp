#include "bchrom/coloring.hpp"

#include <algorithm>
#include <sstream>

namespace bchrom {

std::string_view step_name(Step step) {
  switch (step) {
    case Step::anchor:
      return "anchor";
    case Step::step1:
      return "step1";
    case Step::step2:
      return "step2";
    case Step::step3_new:
      return "step3-new";
    case Step::step3_recolor:
      return "step3-recolor";
    case Step::step4:
      return "step4";
    case Step::completion:
      return "completion";
    case Step::greedy:
      return "greedy";
  }
  return "unknown";
}

bool PartialColoring::total() const {
  return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == kUncolored; });
}

void PartialColoring::assign(Vertex v, Color c, Step step) {
  Color previous = colors_.at(v);
  if (previous != kUncolored) ++recolors_[v];
  colors_[v] = c;
  events_.push_back({step, v, c, previous});
}

std::string format_trace(const Graph& g, std::span<const ColorEvent> events) {
  std::ostringstream out;
  for (const auto& e : events) {
    out << "step=" << step_name(e.step) << " vertex=" << g.label(e.vertex) << " color=" << e.color;
    if (e.previous != kUncolored) out << " recolored-from=" << e.previous;
    out << '\n';
  }
  return out.str();
}

}  // namespace bchrom
