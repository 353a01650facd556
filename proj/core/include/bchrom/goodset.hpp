#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bchrom/density.hpp"
#include "bchrom/graph.hpp"

namespace bchrom {

/// m(G) dense vertices that encircle no outside vertex and dominate every
/// outside vertex of degree >= m(G). Members are kept sorted ascending; the
/// i-th member is the anchor of color i + 1.
struct GoodSet {
  std::vector<Vertex> members;
};

/// Outcome of is_good_set; converts to true only when every condition holds.
struct GoodSetVerdict {
  enum class Reason { none, wrong_size, not_dense, encircles, uncovered_high_degree };

  Reason reason = Reason::none;
  /// Offending vertex for not_dense / encircles / uncovered_high_degree.
  std::optional<Vertex> witness;

  explicit operator bool() const noexcept { return reason == Reason::none; }

  /// "ok", "wrong-size", "not-dense(<label>)", "encircles(<label>)" or
  /// "uncovered-high-degree(<label>)".
  std::string describe(const Graph& g) const;
};

/// True iff every v in W is adjacent to u or shares with u a neighbor
/// w in W of degree exactly m(G) - 1. Vacuously true for empty W.
/// Throws ArgumentError when u is a member of W.
bool encircles(const Graph& g, std::span<const Vertex> subset, Vertex u,
               const DensityProfile& profile);

GoodSetVerdict is_good_set(const Graph& g, std::span<const Vertex> subset,
                           const DensityProfile& profile);

/// Decides existence without search: for girth >= 8 there is no good set iff
/// |M(G)| = m(G) and M(G) encircles some vertex outside it.
/// Throws PreconditionError when the girth is below 8.
bool has_good_set(const Graph& g, const DensityProfile& profile);

/// Backtracking search over m-subsets of M(G), highest degree first.
/// Returns nullopt iff has_good_set is false. Same precondition as
/// has_good_set; throws InvariantViolation if the search disagrees with it.
std::optional<GoodSet> find_good_set(const Graph& g, const DensityProfile& profile);

}  // namespace bchrom
