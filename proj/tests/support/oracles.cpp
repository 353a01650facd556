#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

namespace bchrom::testing {

namespace {

void cycle_dfs(const Graph& g, Vertex start, Vertex at, std::size_t len, std::vector<bool>& on_path,
               std::size_t& best) {
  if (len + 1 >= best) return;
  for (Vertex w : g.neighbors(at)) {
    if (w == start && len >= 2) {
      best = std::min(best, len + 1);
    } else if (w > start && !on_path[w]) {
      on_path[w] = true;
      cycle_dfs(g, start, w, len + 1, on_path, best);
      on_path[w] = false;
    }
  }
}

}  // namespace

std::optional<std::size_t> enumerate_min_cycle(const Graph& g) {
  std::size_t best = static_cast<std::size_t>(-1);
  std::vector<bool> on_path(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    on_path[s] = true;
    cycle_dfs(g, s, s, 0, on_path, best);
    on_path[s] = false;
  }
  if (best == static_cast<std::size_t>(-1)) return std::nullopt;
  return best;
}

std::size_t naive_m(const Graph& g) {
  for (std::size_t k = g.order(); k >= 1; --k) {
    std::size_t count = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) + 1 >= k) ++count;
    }
    if (count >= k) return k;
  }
  return 0;
}

bool naive_encircles(const Graph& g, const std::vector<Vertex>& w, Vertex u, std::size_t m) {
  for (Vertex v : w) {
    if (g.adjacent(u, v)) continue;
    bool via = false;
    for (Vertex x : w) {
      if (x != v && g.adjacent(x, v) && g.adjacent(x, u) && g.degree(x) == m - 1) via = true;
    }
    if (!via) return false;
  }
  return true;
}

bool naive_is_good_set(const Graph& g, const std::vector<Vertex>& w, std::size_t m) {
  std::set<Vertex> members(w.begin(), w.end());
  if (members.size() != m || w.size() != m) return false;
  for (Vertex v : w) {
    if (g.degree(v) + 1 < m) return false;
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    if (members.count(u)) continue;
    if (naive_encircles(g, w, u, m)) return false;
    if (g.degree(u) >= m) {
      bool covered = false;
      for (Vertex v : w) covered = covered || g.adjacent(u, v);
      if (!covered) return false;
    }
  }
  return true;
}

bool naive_is_b_coloring(const Graph& g, const Coloring& coloring, std::size_t k) {
  std::set<Color> used;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (coloring[v] < 1 || static_cast<std::size_t>(coloring[v]) > k) return false;
    used.insert(coloring[v]);
    for (Vertex w : g.neighbors(v)) {
      if (coloring[w] == coloring[v]) return false;
    }
  }
  if (used.size() != k) return false;
  for (Color c = 1; static_cast<std::size_t>(c) <= k; ++c) {
    bool has_b_vertex = false;
    for (Vertex v = 0; v < g.order() && !has_b_vertex; ++v) {
      if (coloring[v] != c) continue;
      std::set<Color> seen;
      for (Vertex w : g.neighbors(v)) seen.insert(coloring[w]);
      has_b_vertex = seen.size() == k - 1;
    }
    if (!has_b_vertex) return false;
  }
  return true;
}

std::size_t partition_b_chromatic(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  Coloring colors(n, 1);
  std::size_t best = 0;
  // Restricted growth strings: colors[i] <= 1 + max(colors[0..i-1]).
  std::function<void(std::size_t, Color)> rec = [&](std::size_t i, Color max_used) {
    if (i == n) {
      if (static_cast<std::size_t>(max_used) > best &&
          naive_is_b_coloring(g, colors, static_cast<std::size_t>(max_used))) {
        best = static_cast<std::size_t>(max_used);
      }
      return;
    }
    for (Color c = 1; c <= max_used + 1; ++c) {
      bool clash = false;
      for (Vertex w : g.neighbors(i)) {
        if (w < i && colors[w] == c) clash = true;
      }
      if (clash) continue;
      colors[i] = c;
      rec(i + 1, std::max(max_used, c));
    }
  };
  rec(0, 0);
  return best;
}

namespace {

std::string rooted_code(const std::vector<std::vector<Vertex>>& adj, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : adj[v]) {
    if (w != parent) kids.push_back(rooted_code(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

std::string canonical_tree(const std::vector<std::vector<Vertex>>& adj) {
  const std::size_t n = adj.size();
  if (n == 1) return "()";
  // Peel leaves to find the center(s).
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = adj[v].size();
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : adj[v]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    std::string code = rooted_code(adj, c, static_cast<Vertex>(-1));
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<Graph> enumerate_free_trees(std::size_t n) {
  using Adj = std::vector<std::vector<Vertex>>;
  if (n == 0) return {};
  std::map<std::string, Adj> level{{"()", Adj(1)}};
  for (std::size_t size = 1; size < n; ++size) {
    std::map<std::string, Adj> next;
    for (const auto& [code, adj] : level) {
      for (Vertex v = 0; v < size; ++v) {
        Adj grown = adj;
        grown.emplace_back();
        grown[v].push_back(size);
        grown[size].push_back(v);
        next.emplace(canonical_tree(grown), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> trees;
  for (const auto& [code, adj] : level) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < adj.size(); ++v) {
      for (Vertex w : adj[v]) {
        if (v < w) edges.emplace_back(v, w);
      }
    }
    trees.push_back(Graph::from_edges(adj.size(), edges));
  }
  return trees;
}

}  // namespace bchrom::testing
