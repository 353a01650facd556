#include "bchrom/density.hpp"

#include <algorithm>
#include <functional>

#include "bchrom/errors.hpp"

namespace bchrom {

bool DensityProfile::is_dense(Vertex v) const {
  return std::binary_search(dense.begin(), dense.end(), v);
}

DensityProfile density_profile(const Graph& g) {
  if (g.empty()) throw ArgumentError("density profile of the empty graph is undefined");

  std::vector<std::size_t> degrees(g.order());
  for (Vertex v = 0; v < g.order(); ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());

  // sorted[k-1] >= k-1 is monotone in k, so the first failure ends the scan.
  std::size_t m = 1;
  while (m < degrees.size() && degrees[m] >= m) ++m;

  DensityProfile profile;
  profile.m = m;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) + 1 >= m) profile.dense.push_back(v);
  }
  return profile;
}

}  // namespace bchrom
