#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "bchrom/coloring.hpp"
#include "bchrom/density.hpp"
#include "bchrom/girth.hpp"
#include "bchrom/goodset.hpp"
#include "bchrom/graph.hpp"
#include "bchrom/oracle.hpp"

namespace bchrom {

/// How chi_b was obtained.
enum class Method {
  construction,       // good set + constructive b-coloring, chi_b = m
  nogoodset_theorem,  // girth >= 9 without a good set, chi_b = m - 1, no coloring
  oracle,             // exact search
  bounds_only,        // only chi_b <= m is known
};

std::string_view method_name(Method method);

struct SolveOptions {
  bool compute_chi_b = true;
  /// Use exact search on graphs of girth below 9 (within the vertex limit).
  bool oracle_below_girth_9 = true;
  OracleOptions oracle;
};

struct Analysis {
  GirthValue girth;
  DensityProfile profile;
  /// Known only for girth >= 8.
  std::optional<bool> has_good_set;
  std::optional<GoodSet> good_set;
  /// Why M(G) itself is not a good set, when no good set exists.
  std::optional<GoodSetVerdict> failure;
  std::optional<std::size_t> chi_b;
  Method method = Method::bounds_only;
  /// Witness coloring; absent for nogoodset_theorem and bounds_only.
  std::optional<BResult> result;
};

/// Girth, density, good-set status and (optionally) chi_b with a witness.
///
/// girth >= 9 with a good set -> construction; girth >= 9 without one ->
/// chi_b = m - 1, colored by exact search when within the oracle limit;
/// girth < 9 -> exact search when enabled and within the limit, otherwise
/// bounds only.
Analysis analyze_graph(const Graph& g, const SolveOptions& options = {});

}  // namespace bchrom
