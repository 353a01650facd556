#include "bchrom/pipeline.hpp"

#include "bchrom/bcolor.hpp"
#include "bchrom/errors.hpp"

namespace bchrom {

std::string_view method_name(Method method) {
  switch (method) {
    case Method::construction:
      return "construction";
    case Method::nogoodset_theorem:
      return "nogoodset-theorem";
    case Method::oracle:
      return "oracle";
    case Method::bounds_only:
      return "bounds-only";
  }
  return "unknown";
}

namespace {

BResult oracle_result(const Graph& g, std::size_t k, Coloring coloring) {
  ValidityReport report = check_b_coloring(g, coloring, k);
  if (!report.valid()) {
    throw InvariantViolation("exact search returned an invalid coloring: " + report.summary(g));
  }
  BResult result;
  result.chi_b = k;
  result.coloring = std::move(coloring);
  result.basis = *report.basis;
  return result;
}

}  // namespace

Analysis analyze_graph(const Graph& g, const SolveOptions& options) {
  Analysis a;
  a.girth = girth(g);
  a.profile = density_profile(g);
  const std::size_t m = a.profile.m;

  if (a.girth.at_least(8)) {
    a.has_good_set = has_good_set(g, a.profile);
    if (*a.has_good_set) {
      a.good_set = find_good_set(g, a.profile);
    } else {
      a.failure = is_good_set(g, a.profile.dense, a.profile);
    }
  }
  if (!options.compute_chi_b) return a;

  const bool within_limit = g.order() <= options.oracle.vertex_limit;
  if (a.girth.at_least(9)) {
    if (a.good_set) {
      a.result = b_coloring_with_good_set(g, *a.good_set);
      a.chi_b = m;
      a.method = Method::construction;
    } else {
      a.chi_b = m - 1;
      a.method = Method::nogoodset_theorem;
      if (within_limit) {
        auto coloring = find_b_coloring_exact(g, m - 1, options.oracle);
        if (!coloring) {
          throw InvariantViolation("no b-coloring with m-1 colors on a girth >= 9 graph");
        }
        a.result = oracle_result(g, m - 1, std::move(*coloring));
        a.method = Method::oracle;
      }
    }
    return a;
  }

  if (options.oracle_below_girth_9 && within_limit) {
    for (std::size_t k = m; k >= 1; --k) {
      if (auto coloring = find_b_coloring_exact(g, k, options.oracle)) {
        a.result = oracle_result(g, k, std::move(*coloring));
        a.chi_b = k;
        a.method = Method::oracle;
        return a;
      }
    }
    throw InvariantViolation("exact search found no b-coloring at any k");
  }
  a.method = Method::bounds_only;
  return a;
}

}  // namespace bchrom
