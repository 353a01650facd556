#include <doctest.h>

#include "bchrom/density.hpp"
#include "bchrom/errors.hpp"
#include "bchrom/generate.hpp"
#include "bchrom/girth.hpp"
#include "bchrom/goodset.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace bchrom;
using namespace bchrom::testing;
using Reason = GoodSetVerdict::Reason;

namespace {

// T_enc vertex names.
constexpr Vertex u = 0, v1 = 1, v2 = 2, v3 = 3, v4 = 4;

bool exhaustive_good_set_exists(const Graph& g, const DensityProfile& p) {
  return for_each_subset(p.dense, p.m, [&](const std::vector<Vertex>& w) {
    return static_cast<bool>(is_good_set(g, w, p));
  });
}

}  // namespace

TEST_CASE("encircles on P5") {
  Graph p5 = path_graph(5);  // a..e = 0..4
  DensityProfile p = density_profile(p5);
  std::vector<Vertex> w{1, 2, 3};
  REQUIRE_FALSE(naive_encircles(p5, w, 0, p.m));
  CHECK_FALSE(encircles(p5, w, 0, p));
  CHECK_FALSE(encircles(p5, w, 4, p));
}

TEST_CASE("encircles on T_enc") {
  Graph g = t_enc();
  DensityProfile p = density_profile(g);
  REQUIRE(p.m == 4);
  REQUIRE(p.dense == std::vector<Vertex>{v1, v2, v3, v4});
  std::vector<Vertex> w{v1, v2, v3, v4};
  REQUIRE(naive_encircles(g, w, u, 4));
  CHECK(encircles(g, w, u, p));
}

TEST_CASE("encircles: empty set is vacuous, members are rejected") {
  Graph g = t_enc();
  DensityProfile p = density_profile(g);
  CHECK(encircles(g, std::vector<Vertex>{}, 7, p));
  std::vector<Vertex> w{v1, v2};
  CHECK_THROWS_AS(encircles(g, w, v1, p), ArgumentError);
}

TEST_CASE("is_good_set verdicts") {
  Graph p5 = path_graph(5);
  DensityProfile pp = density_profile(p5);
  std::vector<Vertex> bcd{1, 2, 3};
  REQUIRE(naive_is_good_set(p5, bcd, pp.m));
  CHECK(static_cast<bool>(is_good_set(p5, bcd, pp)));

  Graph te = t_enc();
  DensityProfile pt = density_profile(te);
  std::vector<Vertex> w{v1, v2, v3, v4};
  GoodSetVerdict verdict = is_good_set(te, w, pt);
  CHECK(verdict.reason == Reason::encircles);
  CHECK(verdict.witness == u);
  CHECK(verdict.describe(te) == "encircles(0)");

  Graph s = star_of_stars();
  DensityProfile ps = density_profile(s);
  REQUIRE(ps.m == 3);
  std::vector<Vertex> uv1v2{0, 1, 2};
  REQUIRE(naive_is_good_set(s, uv1v2, 3));
  CHECK(static_cast<bool>(is_good_set(s, uv1v2, ps)));

  std::vector<Vertex> too_small{1, 2};
  CHECK(is_good_set(p5, too_small, pp).reason == Reason::wrong_size);
  std::vector<Vertex> repeated{1, 1, 2};
  CHECK(is_good_set(p5, repeated, pp).reason == Reason::wrong_size);
  std::vector<Vertex> with_leaf{0, 1, 2};
  GoodSetVerdict not_dense = is_good_set(p5, with_leaf, pp);
  CHECK(not_dense.reason == Reason::not_dense);
  CHECK(not_dense.witness == Vertex{0});
}

TEST_CASE("uncovered high-degree vertex") {
  // Two claws joined by a long path: m = 3 and the path's interior has
  // degree 2; a set of degree-2 vertices far from a hub leaves it uncovered.
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                          {7, 8}, {8, 9}, {9, 10}, {10, 11}, {10, 12}};
  Graph g = Graph::from_edges(13, edges);
  DensityProfile p = density_profile(g);
  REQUIRE(p.m == 3);
  std::vector<Vertex> w{5, 6, 7};
  REQUIRE_FALSE(naive_is_good_set(g, w, 3));
  GoodSetVerdict verdict = is_good_set(g, w, p);
  CHECK(verdict.reason == Reason::uncovered_high_degree);
  CHECK(verdict.witness == Vertex{0});
  CHECK(verdict.describe(g) == "uncovered-high-degree(0)");
}

TEST_CASE("has_good_set on named instances") {
  Graph te = t_enc();
  CHECK_FALSE(has_good_set(te, density_profile(te)));
  Graph c9 = cycle_graph(9);
  DensityProfile pc = density_profile(c9);
  CHECK(pc.m == 3);
  CHECK(pc.dense.size() == 9);
  CHECK(has_good_set(c9, pc));
  Graph p5 = path_graph(5);
  CHECK(has_good_set(p5, density_profile(p5)));
}

TEST_CASE("has_good_set refuses girth below 8") {
  Graph c7 = cycle_graph(7);
  CHECK_THROWS_AS(has_good_set(c7, density_profile(c7)), PreconditionError);
  CHECK_THROWS_AS(find_good_set(c7, density_profile(c7)), PreconditionError);
  Graph c8 = cycle_graph(8);
  CHECK_NOTHROW(has_good_set(c8, density_profile(c8)));
}

TEST_CASE("find_good_set on named instances") {
  Graph p5 = path_graph(5);
  DensityProfile pp = density_profile(p5);
  auto w = find_good_set(p5, pp);
  REQUIRE(w.has_value());
  CHECK(static_cast<bool>(is_good_set(p5, w->members, pp)));

  Graph te = t_enc();
  CHECK_FALSE(find_good_set(te, density_profile(te)).has_value());

  Graph s = star_of_stars();
  auto ws = find_good_set(s, density_profile(s));
  REQUIRE(ws.has_value());
  CHECK(ws->members == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("find_good_set agrees with subset enumeration on every tree up to 10 vertices") {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const Graph& t : enumerate_free_trees(n)) {
      DensityProfile p = density_profile(t);
      bool exists = for_each_subset(p.dense, p.m, [&](const std::vector<Vertex>& w) {
        return naive_is_good_set(t, w, p.m);
      });
      auto found = find_good_set(t, p);
      CHECK(found.has_value() == exists);
      CHECK(has_good_set(t, p) == exists);
      if (found) CHECK(naive_is_good_set(t, found->members, p.m));
      ++checked;
    }
  }
  CHECK(checked == 201);
}

TEST_CASE("characterization matches enumeration on girth >= 8 graphs") {
  std::size_t without = 0;
  auto check = [&](const Graph& g) {
    if (!girth(g).at_least(8)) return;
    DensityProfile p = density_profile(g);
    if (p.dense.size() > 18) return;
    bool exists = exhaustive_good_set_exists(g, p);
    CHECK(has_good_set(g, p) == exists);
    if (p.dense.size() > p.m) CHECK(has_good_set(g, p));
    auto found = find_good_set(g, p);
    CHECK(found.has_value() == exists);
    if (!exists) ++without;
  };
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    check(generate_girth_constrained(8 + seed % 30, 8, 10 + seed % 30, seed));
    check(preferential_tree(6 + seed % 30, seed));
  }
  for (std::size_t r = 2; r <= 4; ++r) {
    for (std::size_t tail = 0; tail < 4; ++tail) check(encircled_family(r, tail));
  }
  CHECK(without > 0);
}
