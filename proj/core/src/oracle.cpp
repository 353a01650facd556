#include "bchrom/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bchrom/density.hpp"
#include "bchrom/errors.hpp"
#include "bchrom/goodset.hpp"

namespace bchrom {

std::string_view kind_name(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::monochromatic_edge:
      return "monochromatic-edge";
    case Violation::Kind::class_without_b_vertex:
      return "class-without-b-vertex";
    case Violation::Kind::color_gap:
      return "color-gap";
  }
  return "unknown";
}

std::string ValidityReport::summary(const Graph& g) const {
  std::ostringstream out;
  for (const auto& v : violations) {
    out << kind_name(v.kind);
    for (Vertex x : v.vertices) out << ' ' << g.label(x);
    out << " color=" << v.color << '\n';
  }
  return out.str();
}

bool is_b_vertex(const Graph& g, std::span<const Color> coloring, Vertex v, std::size_t k) {
  std::vector<bool> seen(k + 1, false);
  for (Vertex w : g.neighbors(v)) {
    Color c = coloring[w];
    if (c >= 1 && static_cast<std::size_t>(c) <= k) seen[c] = true;
  }
  for (Color c = 1; static_cast<std::size_t>(c) <= k; ++c) {
    if (c != coloring[v] && !seen[c]) return false;
  }
  return true;
}

ValidityReport check_b_coloring(const Graph& g, std::span<const Color> coloring, std::size_t k) {
  if (coloring.size() != g.order()) {
    throw ArgumentError("coloring covers " + std::to_string(coloring.size()) + " of " +
                        std::to_string(g.order()) + " vertices");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (coloring[v] == kUncolored) {
      throw ArgumentError("vertex " + std::to_string(g.label(v)) + " is uncolored");
    }
  }

  using Kind = Violation::Kind;
  ValidityReport report;
  for (const auto& [u, v] : g.edges()) {
    if (coloring[u] == coloring[v]) {
      report.proper = false;
      report.violations.push_back({Kind::monochromatic_edge, {u, v}, coloring[u]});
    }
  }

  std::set<Color> used(coloring.begin(), coloring.end());
  report.colors_used = used.size();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (coloring[v] < 1 || static_cast<std::size_t>(coloring[v]) > k) {
      report.violations.push_back({Kind::color_gap, {v}, coloring[v]});
    }
  }

  std::vector<Vertex> basis;
  for (Color c = 1; static_cast<std::size_t>(c) <= k; ++c) {
    if (used.count(c) == 0) {
      report.violations.push_back({Kind::color_gap, {}, c});
      continue;
    }
    std::optional<Vertex> witness;
    for (Vertex v = 0; v < g.order() && !witness; ++v) {
      if (coloring[v] == c && is_b_vertex(g, coloring, v, k)) witness = v;
    }
    if (witness) {
      basis.push_back(*witness);
    } else {
      report.violations.push_back({Kind::class_without_b_vertex, {}, c});
    }
  }
  if (report.violations.empty()) report.basis = std::move(basis);
  return report;
}

namespace {

// Backtracking completion of a coloring whose basis b_1..b_k is fixed to
// colors 1..k.
class BasisSearch {
 public:
  BasisSearch(const Graph& g, std::size_t k, std::span<const Vertex> basis)
      : g_(g), k_(k), colors_(g.order(), kUncolored), basis_pos_(g.order(), kNotBasis) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      basis_pos_[basis[i]] = i;
      colors_[basis[i]] = static_cast<Color>(i + 1);
    }
    seen_.assign(basis.size(), std::vector<int>(k + 1, 0));
    missing_.assign(basis.size(), k - 1);
    free_.assign(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Vertex b = basis[i];
      for (Vertex w : g.neighbors(b)) {
        Color c = colors_[w];
        if (c == kUncolored) {
          ++free_[i];
        } else if (seen_[i][c]++ == 0) {
          --missing_[i];
        }
      }
    }
    // Neighbors of the basis first: they decide feasibility.
    std::vector<bool> queued(g.order(), false);
    for (Vertex b : basis) {
      queued[b] = true;
    }
    for (Vertex b : basis) {
      for (Vertex w : g.neighbors(b)) {
        if (!queued[w]) {
          queued[w] = true;
          order_.push_back(w);
        }
      }
    }
    std::sort(order_.begin(), order_.end());
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!queued[v]) order_.push_back(v);
    }
  }

  std::optional<Coloring> run() {
    for (std::size_t i = 0; i < missing_.size(); ++i) {
      if (missing_[i] > free_[i]) return std::nullopt;
    }
    if (descend(0)) return colors_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kNotBasis = static_cast<std::size_t>(-1);

  bool descend(std::size_t idx) {
    if (idx == order_.size()) return true;
    Vertex v = order_[idx];
    std::vector<bool> blocked(k_ + 1, false);
    for (Vertex w : g_.neighbors(v)) {
      if (colors_[w] != kUncolored) blocked[colors_[w]] = true;
    }
    for (Color c = 1; static_cast<std::size_t>(c) <= k_; ++c) {
      if (blocked[c]) continue;
      if (apply(v, c) && descend(idx + 1)) return true;
      undo(v, c);
    }
    return false;
  }

  // Assigns v := c and reports whether every adjacent basis vertex can
  // still collect its missing colors.
  bool apply(Vertex v, Color c) {
    colors_[v] = c;
    bool ok = true;
    for (Vertex w : g_.neighbors(v)) {
      std::size_t p = basis_pos_[w];
      if (p == kNotBasis) continue;
      --free_[p];
      if (seen_[p][c]++ == 0 && c != colors_[w]) --missing_[p];
      if (missing_[p] > free_[p]) ok = false;
    }
    return ok;
  }

  void undo(Vertex v, Color c) {
    for (Vertex w : g_.neighbors(v)) {
      std::size_t p = basis_pos_[w];
      if (p == kNotBasis) continue;
      ++free_[p];
      if (--seen_[p][c] == 0 && c != colors_[w]) ++missing_[p];
    }
    colors_[v] = kUncolored;
  }

  const Graph& g_;
  std::size_t k_;
  Coloring colors_;
  std::vector<std::size_t> basis_pos_;
  std::vector<std::vector<int>> seen_;
  std::vector<std::size_t> missing_;
  std::vector<std::size_t> free_;
  std::vector<Vertex> order_;
};

void check_limit(const Graph& g, const OracleOptions& options) {
  if (g.order() > options.vertex_limit) {
    throw OracleLimitError("exact search refused: " + std::to_string(g.order()) +
                           " vertices exceed the oracle limit of " +
                           std::to_string(options.vertex_limit));
  }
}

}  // namespace

std::optional<Coloring> find_b_coloring_exact(const Graph& g, std::size_t k,
                                              const OracleOptions& options) {
  check_limit(g, options);
  if (k == 0 || k > g.order()) return std::nullopt;

  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) + 1 >= k) candidates.push_back(v);
  }
  if (candidates.size() < k) return std::nullopt;

  std::optional<DensityProfile> profile;
  if (options.encirclement_prune && !g.empty()) {
    profile = density_profile(g);
    if (profile->m != k) profile.reset();
  }

  // Lexicographic k-subsets of the candidates.
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::vector<Vertex> basis(k);
  std::vector<bool> in_basis(g.order(), false);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) basis[i] = candidates[pick[i]];

    bool pruned = false;
    if (profile) {
      std::fill(in_basis.begin(), in_basis.end(), false);
      for (Vertex b : basis) in_basis[b] = true;
      for (Vertex u = 0; u < g.order() && !pruned; ++u) {
        if (!in_basis[u] && encircles(g, basis, u, *profile)) pruned = true;
      }
    }
    if (!pruned) {
      if (auto found = BasisSearch(g, k, basis).run()) return found;
    }

    std::size_t i = k;
    while (i > 0 && pick[i - 1] == candidates.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

std::size_t exact_b_chromatic(const Graph& g, const OracleOptions& options) {
  check_limit(g, options);
  DensityProfile profile = density_profile(g);
  for (std::size_t k = profile.m; k >= 1; --k) {
    if (find_b_coloring_exact(g, k, options)) return k;
  }
  // A chi(G)-coloring is always a b-coloring, so the scan cannot get here.
  throw InvariantViolation("exact search found no b-coloring at any k");
}

}  // namespace bchrom
