#include "bchrom/generate.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "bchrom/errors.hpp"

namespace bchrom {

namespace {

// True when v is reachable from u in at most `limit` steps.
bool within_distance(const std::vector<std::vector<Vertex>>& adj, Vertex u, Vertex v,
                     std::size_t limit, std::vector<std::size_t>& dist,
                     std::vector<Vertex>& queue) {
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  queue.clear();
  queue.push_back(u);
  dist[u] = 0;
  bool found = false;
  for (std::size_t head = 0; head < queue.size() && !found; ++head) {
    Vertex x = queue[head];
    if (dist[x] == limit) continue;
    for (Vertex y : adj[x]) {
      if (dist[y] != kUnseen) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
      if (y == v) {
        found = true;
        break;
      }
    }
  }
  for (Vertex x : queue) dist[x] = kUnseen;
  return found;
}

}  // namespace

Graph generate_girth_constrained(std::size_t n, std::size_t min_girth, std::size_t edge_budget,
                                 std::uint64_t seed) {
  if (min_girth < 3) throw ArgumentError("min_girth must be at least 3");
  if (n < 2 || edge_budget == 0) return Graph::from_edges(n, {});

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);

  std::vector<std::vector<Vertex>> adj(n);
  std::vector<Edge> edges;
  std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
  std::vector<Vertex> queue;
  queue.reserve(n);

  const std::size_t max_pairs = n * (n - 1) / 2;
  const std::size_t max_rejections = std::max<std::size_t>(64, 8 * n);
  std::size_t rejections = 0;

  while (edges.size() < edge_budget && edges.size() < max_pairs && rejections < max_rejections) {
    Vertex u = pick(rng);
    Vertex v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    // Closing u-v creates a cycle of length dist(u,v)+1.
    if (within_distance(adj, u, v, min_girth - 2, dist, queue)) {
      ++rejections;
      continue;
    }
    rejections = 0;
    adj[u].push_back(v);
    adj[v].push_back(u);
    edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 2) return Graph::from_edges(n, {});
  std::vector<Edge> edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
    return Graph::from_edges(n, edges);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);

  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  for (Vertex c : code) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  Vertex a = *leaves.begin();
  Vertex b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

}  // namespace bchrom
