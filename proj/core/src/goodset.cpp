#include "bchrom/goodset.hpp"

#include <algorithm>
#include <functional>

#include "bchrom/errors.hpp"
#include "bchrom/girth.hpp"

namespace bchrom {

namespace {

void require_girth_at_least_8(const Graph& g) {
  GirthValue gv = girth(g);
  if (!gv.at_least(8)) {
    throw PreconditionError("good-set characterization needs girth >= 8, graph has girth " +
                            gv.to_string());
  }
}

// Encirclement test with W given as a mask.
bool encircled_by(const Graph& g, std::span<const Vertex> subset, const std::vector<bool>& in_set,
                  Vertex u, std::size_t m) {
  std::vector<Vertex> witnesses;
  for (Vertex w : g.neighbors(u)) {
    if (in_set[w] && g.degree(w) + 1 == m) witnesses.push_back(w);
  }
  for (Vertex v : subset) {
    if (g.adjacent(u, v)) continue;
    bool linked = std::any_of(witnesses.begin(), witnesses.end(),
                              [&](Vertex w) { return g.adjacent(w, v); });
    if (!linked) return false;
  }
  return true;
}

}  // namespace

std::string GoodSetVerdict::describe(const Graph& g) const {
  auto tag = [&](const char* name) {
    return std::string(name) + "(" + std::to_string(g.label(*witness)) + ")";
  };
  switch (reason) {
    case Reason::none:
      return "ok";
    case Reason::wrong_size:
      return "wrong-size";
    case Reason::not_dense:
      return tag("not-dense");
    case Reason::encircles:
      return tag("encircles");
    case Reason::uncovered_high_degree:
      return tag("uncovered-high-degree");
  }
  return "unknown";
}

bool encircles(const Graph& g, std::span<const Vertex> subset, Vertex u,
               const DensityProfile& profile) {
  auto in_set = membership_mask(g, subset);
  if (u >= g.order()) throw ArgumentError("unknown vertex id " + std::to_string(u));
  if (in_set[u]) throw ArgumentError("encircled vertex must lie outside the set");
  return encircled_by(g, subset, in_set, u, profile.m);
}

GoodSetVerdict is_good_set(const Graph& g, std::span<const Vertex> subset,
                           const DensityProfile& profile) {
  using Reason = GoodSetVerdict::Reason;
  auto in_set = membership_mask(g, subset);
  std::size_t distinct = static_cast<std::size_t>(std::count(in_set.begin(), in_set.end(), true));
  if (distinct != subset.size() || subset.size() != profile.m) return {Reason::wrong_size, {}};

  for (Vertex v : subset) {
    if (!profile.is_dense(v)) return {Reason::not_dense, v};
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!in_set[u] && encircled_by(g, subset, in_set, u, profile.m)) {
      return {Reason::encircles, u};
    }
  }
  for (Vertex x = 0; x < g.order(); ++x) {
    if (in_set[x] || g.degree(x) < profile.m) continue;
    auto nbrs = g.neighbors(x);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return in_set[w]; })) {
      return {Reason::uncovered_high_degree, x};
    }
  }
  return {};
}

bool has_good_set(const Graph& g, const DensityProfile& profile) {
  require_girth_at_least_8(g);
  if (profile.dense.size() != profile.m) return true;
  auto in_set = membership_mask(g, profile.dense);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!in_set[u] && encircled_by(g, profile.dense, in_set, u, profile.m)) return false;
  }
  return true;
}

namespace {

class GoodSetSearch {
 public:
  GoodSetSearch(const Graph& g, const DensityProfile& profile) : g_(g), profile_(profile) {
    candidates_ = profile.dense;
    std::stable_sort(candidates_.begin(), candidates_.end(), [&](Vertex a, Vertex b) {
      return g.degree(a) > g.degree(b);
    });
    position_.assign(g.order(), kNone);
    for (std::size_t i = 0; i < candidates_.size(); ++i) position_[candidates_[i]] = i;

    // Vertices of degree >= m are all dense; each must end up in W or next
    // to it. Record the last candidate position that could still cover it.
    cover_.assign(g.order(), 0);
    for (Vertex x : candidates_) {
      if (g.degree(x) < profile.m) continue;
      std::size_t last = kNone;
      for (Vertex w : g.neighbors(x)) {
        if (position_[w] != kNone && (last == kNone || position_[w] > last)) last = position_[w];
      }
      high_.push_back({x, last});
    }
  }

  std::optional<GoodSet> run() {
    chosen_.clear();
    if (descend(0)) {
      GoodSet result{chosen_};
      std::sort(result.members.begin(), result.members.end());
      return result;
    }
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct HighDegree {
    Vertex vertex;
    std::size_t last_cover;
  };

  bool cover_still_possible(std::size_t pos) const {
    for (const auto& [x, last] : high_) {
      bool skipped = position_[x] < pos && std::find(chosen_.begin(), chosen_.end(), x) ==
                                                chosen_.end();
      if (skipped && cover_[x] == 0 && (last == kNone || last < pos)) return false;
    }
    return true;
  }

  bool descend(std::size_t pos) {
    const std::size_t need = profile_.m - chosen_.size();
    if (need == 0) return static_cast<bool>(is_good_set(g_, chosen_, profile_));
    if (candidates_.size() - pos < need) return false;
    if (!cover_still_possible(pos)) return false;

    Vertex v = candidates_[pos];
    chosen_.push_back(v);
    for (Vertex w : g_.neighbors(v)) ++cover_[w];
    bool found = descend(pos + 1);
    for (Vertex w : g_.neighbors(v)) --cover_[w];
    if (found) return true;
    chosen_.pop_back();

    return descend(pos + 1);
  }

  const Graph& g_;
  const DensityProfile& profile_;
  std::vector<Vertex> candidates_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> cover_;
  std::vector<HighDegree> high_;
  std::vector<Vertex> chosen_;
};

}  // namespace

std::optional<GoodSet> find_good_set(const Graph& g, const DensityProfile& profile) {
  if (!has_good_set(g, profile)) return std::nullopt;

  auto found = GoodSetSearch(g, profile).run();
  if (!found) {
    throw InvariantViolation("good-set search exhausted although the characterization "
                             "guarantees a good set");
  }
  if (!is_good_set(g, found->members, profile)) {
    throw InvariantViolation("good-set search returned a set that fails verification");
  }
  return found;
}

}  // namespace bchrom
