#include "bchrom/girth.hpp"

#include <limits>
#include <vector>

namespace bchrom {

GirthValue girth(const Graph& g) {
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.order();
  std::size_t best = kUnseen;

  std::vector<std::size_t> dist(n, kUnseen);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);

  for (Vertex root = 0; root < n; ++root) {
    queue.clear();
    queue.push_back(root);
    dist[root] = 0;
    parent[root] = root;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      // No cycle through this root can beat `best` from here on.
      if (best != kUnseen && 2 * dist[u] >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          std::size_t len = dist[u] + dist[w] + 1;
          if (len < best) best = len;
        }
      }
    }
    for (Vertex v : queue) dist[v] = kUnseen;
  }
  return best == kUnseen ? GirthValue::acyclic() : GirthValue::finite(best);
}

}  // namespace bchrom
