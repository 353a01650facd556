#include "bchrom/bcolor.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>

#include "bchrom/density.hpp"
#include "bchrom/errors.hpp"
#include "bchrom/girth.hpp"
#include "bchrom/oracle.hpp"

namespace bchrom {

namespace {

struct Anchors {
  std::vector<Vertex> members;  // v_1..v_m, ascending id
  std::vector<Color> color_of;  // color index for members, kUncolored otherwise

  Anchors(const Graph& g, const GoodSet& good_set) : members(good_set.members) {
    std::sort(members.begin(), members.end());
    color_of.assign(g.order(), kUncolored);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i] >= g.order()) throw ArgumentError("good-set member out of range");
      color_of[members[i]] = static_cast<Color>(i + 1);
    }
  }

  bool contains(Vertex v) const { return color_of[v] != kUncolored; }
  std::size_t size() const { return members.size(); }
};

std::string vertex_text(const Graph& g, Vertex v) { return std::to_string(g.label(v)); }

void check_proper(const Graph& g, const PartialColoring& pc, Step after) {
  for (const auto& [u, v] : g.edges()) {
    if (pc.colored(u) && pc.color(u) == pc.color(v)) {
      throw InvariantViolation("P1 violated after " + std::string(step_name(after)) + ": edge " +
                               vertex_text(g, u) + "-" + vertex_text(g, v) + " has color " +
                               std::to_string(pc.color(u)) + " on both ends");
    }
  }
}

// Colors 1..m (other than the anchor's own) absent from N(anchor).
std::vector<Color> missing_colors(const Graph& g, const PartialColoring& pc, Vertex anchor,
                                  std::size_t m) {
  std::vector<bool> seen(m + 1, false);
  for (Vertex w : g.neighbors(anchor)) {
    Color c = pc.color(w);
    if (c != kUncolored && static_cast<std::size_t>(c) <= m) seen[c] = true;
  }
  std::vector<Color> missing;
  for (Color c = 1; static_cast<std::size_t>(c) <= m; ++c) {
    if (c != pc.color(anchor) && !seen[c]) missing.push_back(c);
  }
  return missing;
}

std::vector<Vertex> uncolored_neighbors(const Graph& g, const PartialColoring& pc, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v)) {
    if (!pc.colored(w)) out.push_back(w);
  }
  return out;
}

void check_missing_coverable(const Graph& g, const PartialColoring& pc, const Anchors& anchors) {
  for (Vertex v : anchors.members) {
    std::size_t missing = missing_colors(g, pc, v, anchors.size()).size();
    std::size_t free = uncolored_neighbors(g, pc, v).size();
    if (free < missing) {
      throw InvariantViolation("P2 violated at anchor " + vertex_text(g, v) + ": " +
                               std::to_string(missing) + " missing colors, " +
                               std::to_string(free) + " uncolored neighbors");
    }
  }
}

std::optional<Vertex> first_neighbor_in(const Graph& g, Vertex v, const std::vector<bool>& mask,
                                        std::optional<Vertex> except = std::nullopt) {
  for (Vertex w : g.neighbors(v)) {
    if (mask[w] && w != except) return w;
  }
  return std::nullopt;
}

struct SlotTarget {
  Vertex vertex;
  std::optional<Color> forbidden;
};

// Cyclic-shift derangement over `palette`, where targets without a
// forbidden color take the positions the shift leaves free.
std::vector<std::pair<Vertex, Color>> assign_avoiding(std::span<const SlotTarget> targets,
                                                      std::span<const Color> palette) {
  std::vector<Color> sequence;
  std::vector<std::size_t> constrained;
  std::vector<std::size_t> free_targets;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    if (targets[j].forbidden) {
      constrained.push_back(j);
      sequence.push_back(*targets[j].forbidden);
    } else {
      free_targets.push_back(j);
    }
  }
  for (Color c : palette) {
    if (std::find(sequence.begin(), sequence.end(), c) == sequence.end()) sequence.push_back(c);
  }
  const std::size_t s = sequence.size();
  if (targets.size() > s) throw ArgumentError("more targets than palette colors");
  if (constrained.size() == 1 && s == 1) {
    throw ArgumentError("single target forbids the only palette color");
  }

  std::vector<std::pair<Vertex, Color>> result(targets.size());
  std::vector<bool> used(s, false);
  for (std::size_t j = 0; j < constrained.size(); ++j) {
    std::size_t pos = (j + 1) % s;
    used[pos] = true;
    result[constrained[j]] = {targets[constrained[j]].vertex, sequence[pos]};
  }
  std::size_t pos = 0;
  for (std::size_t j : free_targets) {
    while (used[pos]) ++pos;
    used[pos] = true;
    result[j] = {targets[j].vertex, sequence[pos]};
  }
  return result;
}

}  // namespace

LinkStructure classify_links(const Graph& g, const GoodSet& good_set) {
  const std::size_t n = g.order();
  Anchors anchors(g, good_set);

  std::vector<std::vector<Vertex>> w_neighbors(n);
  for (Vertex x = 0; x < n; ++x) {
    if (anchors.contains(x)) continue;
    for (Vertex w : g.neighbors(x)) {
      if (anchors.contains(w)) w_neighbors[x].push_back(w);
    }
  }

  LinkStructure ls;
  ls.in_links.assign(n, false);
  ls.in_l1.assign(n, false);
  ls.in_l2.assign(n, false);

  for (Vertex x = 0; x < n; ++x) {
    if (anchors.contains(x)) continue;
    if (w_neighbors[x].size() >= 2) {
      ls.in_links[x] = true;  // v - x - v'
      continue;
    }
    // v - x - y - v' with v != v'; x has exactly one W-neighbor here.
    if (w_neighbors[x].empty()) continue;
    for (Vertex y : g.neighbors(x)) {
      if (anchors.contains(y)) continue;
      const auto& wy = w_neighbors[y];
      bool distinct_end = std::any_of(wy.begin(), wy.end(),
                                      [&](Vertex b) { return b != w_neighbors[x].front(); });
      if (distinct_end) {
        ls.in_links[x] = true;
        break;
      }
    }
  }

  for (Vertex x = 0; x < n; ++x) {
    if (!ls.in_links[x]) continue;
    ls.links.push_back(x);
    if (first_neighbor_in(g, x, ls.in_links)) {
      ls.in_l1[x] = true;
      ls.l1.push_back(x);
    }
    if (w_neighbors[x].size() >= 2) {
      ls.in_l2[x] = true;
      ls.l2.push_back(x);
    }
  }
  return ls;
}

std::vector<std::pair<Vertex, Color>> derange_assign(std::span<const DerangeTarget> targets,
                                                     std::span<const Color> palette) {
  if (palette.size() < 2) throw ArgumentError("derangement palette needs at least two colors");
  if (targets.size() > palette.size()) throw ArgumentError("more targets than palette colors");
  std::vector<Color> sorted_palette(palette.begin(), palette.end());
  std::sort(sorted_palette.begin(), sorted_palette.end());
  if (std::adjacent_find(sorted_palette.begin(), sorted_palette.end()) != sorted_palette.end()) {
    throw ArgumentError("palette colors must be distinct");
  }
  std::vector<Color> forbidden;
  std::vector<SlotTarget> slots;
  for (const auto& t : targets) {
    if (!std::binary_search(sorted_palette.begin(), sorted_palette.end(), t.forbidden)) {
      throw ArgumentError("forbidden color " + std::to_string(t.forbidden) + " not in palette");
    }
    if (std::find(forbidden.begin(), forbidden.end(), t.forbidden) != forbidden.end()) {
      throw ArgumentError("two targets forbid color " + std::to_string(t.forbidden));
    }
    forbidden.push_back(t.forbidden);
    slots.push_back({t.vertex, t.forbidden});
  }
  return assign_avoiding(slots, palette);
}

PartialColoring color_links(const Graph& g, const GoodSet& good_set, const LinkStructure& ls) {
  Anchors anchors(g, good_set);
  const std::size_t m = anchors.size();
  const std::vector<bool> in_w = membership_mask(g, anchors.members);

  PartialColoring pc(g.order());
  for (std::size_t i = 0; i < m; ++i) {
    pc.assign(anchors.members[i], static_cast<Color>(i + 1), Step::anchor);
  }
  check_proper(g, pc, Step::anchor);

  // Step 1: x takes the anchor color of a W-neighbor of one of its L-neighbors.
  for (Vertex x : ls.l1) {
    Vertex partner = *first_neighbor_in(g, x, ls.in_links);
    auto anchor = first_neighbor_in(g, partner, in_w);
    if (!anchor) {
      throw InvariantViolation("link vertex " + vertex_text(g, partner) + " has no W-neighbor");
    }
    pc.assign(x, anchors.color_of[*anchor], Step::step1);
  }
  check_proper(g, pc, Step::step1);

  // Step 2: derange the colors of the second W-neighbors around each anchor.
  for (Vertex vi : anchors.members) {
    std::vector<Vertex> star = restricted_neighbors(g, vi, ls.in_l2);
    if (star.size() <= 1) continue;

    std::vector<Color> palette;
    std::vector<Color> forbidden;
    for (Vertex x : star) {
      Color c = anchors.color_of[*first_neighbor_in(g, x, in_w, vi)];
      if (std::find(palette.begin(), palette.end(), c) != palette.end()) {
        throw InvariantViolation("repeated second W-neighbor around anchor " + vertex_text(g, vi));
      }
      palette.push_back(c);
      forbidden.push_back(c);
    }
    std::vector<Color> available;
    for (Color c : palette) {
      bool pinned = std::any_of(star.begin(), star.end(),
                                [&](Vertex x) { return pc.color(x) == c; });
      if (!pinned) available.push_back(c);
    }
    std::vector<SlotTarget> targets;
    for (std::size_t j = 0; j < star.size(); ++j) {
      if (pc.colored(star[j])) continue;
      bool constrained =
          std::find(available.begin(), available.end(), forbidden[j]) != available.end();
      targets.push_back({star[j], constrained ? std::optional<Color>(forbidden[j]) : std::nullopt});
    }
    if (targets.empty()) continue;
    std::vector<std::pair<Vertex, Color>> assignment;
    try {
      assignment = assign_avoiding(targets, available);
    } catch (const ArgumentError& e) {
      throw InvariantViolation("step2 at anchor " + vertex_text(g, vi) + ": " + e.what());
    }
    for (const auto& [x, c] : assignment) pc.assign(x, c, Step::step2);
  }
  check_proper(g, pc, Step::step2);

  // Step 3: borrow the color of an L1 neighbor of one anchor, and recolor
  // that neighbor with another anchor adjacent to x.
  for (Vertex x : ls.l2) {
    if (pc.colored(x)) continue;
    for (Vertex vi : restricted_neighbors(g, x, in_w)) {
      auto y = first_neighbor_in(g, vi, ls.in_l1);
      if (!y) continue;
      Vertex vj = *first_neighbor_in(g, x, in_w, vi);
      if (pc.recolor_count(*y) != 0) {
        throw InvariantViolation("vertex " + vertex_text(g, *y) + " recolored twice in step3");
      }
      pc.assign(x, pc.color(*y), Step::step3_new);
      pc.assign(*y, anchors.color_of[vj], Step::step3_recolor);
      break;
    }
  }
  check_proper(g, pc, Step::step3_new);

  // Step 4: any anchor not adjacent to x and not joined to x through a
  // W-vertex of degree m-1; one exists because W encircles nothing.
  for (Vertex x : ls.l2) {
    if (pc.colored(x)) continue;
    std::optional<Color> choice;
    for (Vertex vi : anchors.members) {
      if (g.adjacent(x, vi)) continue;
      auto x_nbrs = g.neighbors(x);
      bool joined = std::any_of(x_nbrs.begin(), x_nbrs.end(), [&](Vertex w) {
        return in_w[w] && g.degree(w) + 1 == m && g.adjacent(w, vi);
      });
      if (!joined) {
        choice = anchors.color_of[vi];
        break;
      }
    }
    if (!choice) {
      throw InvariantViolation("step4 found no admissible anchor for " + vertex_text(g, x) +
                               " (vertex is encircled)");
    }
    pc.assign(x, *choice, Step::step4);
  }
  check_proper(g, pc, Step::step4);

  for (Vertex x : ls.links) {
    if (!pc.colored(x)) {
      throw InvariantViolation("link vertex " + vertex_text(g, x) + " left uncolored");
    }
  }
  check_missing_coverable(g, pc, anchors);
  return pc;
}

PartialColoring complete_b_vertices(const Graph& g, const GoodSet& good_set, PartialColoring pc) {
  Anchors anchors(g, good_set);
  const std::size_t m = anchors.size();

  std::vector<bool> pending(g.order(), false);
  for (Vertex v : anchors.members) {
    for (Vertex w : g.neighbors(v)) {
      if (!pc.colored(w)) pending[w] = true;
    }
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!pending[u]) continue;
    for (Vertex w : g.neighbors(u)) {
      if (pending[w]) {
        throw InvariantViolation("uncolored W-neighbors " + vertex_text(g, u) + " and " +
                                 vertex_text(g, w) + " are adjacent");
      }
    }
  }

  for (Vertex v : anchors.members) {
    auto missing = missing_colors(g, pc, v, m);
    auto free = uncolored_neighbors(g, pc, v);
    if (free.size() < missing.size()) {
      throw InvariantViolation("anchor " + vertex_text(g, v) + " has " +
                               std::to_string(free.size()) + " uncolored neighbors for " +
                               std::to_string(missing.size()) + " missing colors");
    }
    for (std::size_t k = 0; k < missing.size(); ++k) pc.assign(free[k], missing[k], Step::completion);
  }

  // High-degree leftovers must be colored now: greedy only handles degree < m.
  for (Vertex v : anchors.members) {
    for (Vertex w : uncolored_neighbors(g, pc, v)) {
      if (g.degree(w) < m) continue;
      std::vector<bool> taken(m + 1, false);
      for (Vertex z : g.neighbors(w)) {
        if (pc.colored(z)) taken[pc.color(z)] = true;
      }
      Color c = 1;
      while (static_cast<std::size_t>(c) <= m && taken[c]) ++c;
      if (static_cast<std::size_t>(c) > m) {
        throw InvariantViolation("no color left for W-neighbor " + vertex_text(g, w));
      }
      pc.assign(w, c, Step::completion);
    }
  }

  check_proper(g, pc, Step::completion);
  for (Vertex v : anchors.members) {
    if (!missing_colors(g, pc, v, m).empty()) {
      throw InvariantViolation("anchor " + vertex_text(g, v) + " is not a b-vertex after completion");
    }
  }
  return pc;
}

PartialColoring greedy_extend(const Graph& g, PartialColoring pc, std::size_t m) {
  std::vector<bool> taken(m + 2, false);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (pc.colored(v)) continue;
    std::fill(taken.begin(), taken.end(), false);
    for (Vertex w : g.neighbors(v)) {
      Color c = pc.color(w);
      if (c != kUncolored && static_cast<std::size_t>(c) <= m) taken[c] = true;
    }
    Color c = 1;
    while (static_cast<std::size_t>(c) <= m && taken[c]) ++c;
    if (static_cast<std::size_t>(c) > m) {
      throw InvariantViolation("greedy extension: no color in 1.." + std::to_string(m) +
                               " left for vertex " + vertex_text(g, v));
    }
    pc.assign(v, c, Step::greedy);
  }
  return pc;
}

BResult b_coloring_with_good_set(const Graph& g, const GoodSet& good_set) {
  GirthValue gv = girth(g);
  if (!gv.at_least(9)) {
    throw PreconditionError("good-set construction needs girth >= 9, graph has girth " +
                            gv.to_string());
  }
  DensityProfile profile = density_profile(g);
  GoodSetVerdict verdict = is_good_set(g, good_set.members, profile);
  if (!verdict) throw ArgumentError("not a good set: " + verdict.describe(g));

  GoodSet ordered = good_set;
  std::sort(ordered.members.begin(), ordered.members.end());
  const std::size_t m = profile.m;

  LinkStructure ls = classify_links(g, ordered);
  PartialColoring pc = color_links(g, ordered, ls);
  pc = complete_b_vertices(g, ordered, std::move(pc));
  pc = greedy_extend(g, std::move(pc), m);

  BResult result;
  result.chi_b = m;
  result.coloring = pc.colors();
  result.basis = ordered.members;
  result.trace.assign(pc.events().begin(), pc.events().end());

  ValidityReport report = check_b_coloring(g, result.coloring, m);
  if (!report.valid()) {
    throw InvariantViolation("constructed coloring fails the b-coloring check: " +
                             report.summary(g));
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_b_vertex(g, result.coloring, ordered.members[i], m)) {
      throw InvariantViolation("anchor " + vertex_text(g, ordered.members[i]) +
                               " is not a b-vertex in the final coloring");
    }
  }
  return result;
}

}  // namespace bchrom
