#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "simplext/errors.hpp"
#include "simplext/matchings.hpp"

#include "support.hpp"

using namespace simplext;

namespace {

Matching m(std::size_t nodes, std::initializer_list<Edge> edges) {
  return Matching::from_edges(nodes, std::vector<Edge>(edges));
}

// Brute-force common-neighbor oracle over all perfect matchings.
bool has_common_neighbor(const std::vector<Matching>& all, const Matching& m1,
                         const Matching& m2, const Matching& m3) {
  for (const auto& cand : all)
    if (matching_adjacent(cand, m1) && matching_adjacent(cand, m2) &&
        matching_adjacent(cand, m3))
      return true;
  return false;
}

}  // namespace

TEST_CASE("perfect matching counts satisfy (2n)!/(n! 2^n)") {
  CHECK(perfect_matchings(2).size() == 1);
  CHECK(perfect_matchings(4).size() == 3);
  CHECK(perfect_matchings(6).size() == 15);
  CHECK(perfect_matchings(8).size() == 105);
  CHECK(perfect_matchings(10).size() == 945);
  CHECK_THROWS_AS(perfect_matchings(12), OutOfRange);
  CHECK_THROWS_AS(perfect_matchings(5), OutOfRange);
}

TEST_CASE("symmetric difference cycles") {
  const auto m1 = m(4, {{0, 1}, {2, 3}});
  const auto m2 = m(4, {{0, 2}, {1, 3}});
  const auto dec = sym_diff_cycles(m1, m2);
  REQUIRE(dec.cycles.size() == 1);
  CHECK(dec.cycles[0].size() == 4);
  CHECK(dec.common.empty());

  const auto a = m(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  const auto b = m(8, {{0, 3}, {1, 2}, {4, 7}, {5, 6}});
  const auto two = sym_diff_cycles(a, b);
  CHECK(two.cycles.size() == 2);

  const auto same = sym_diff_cycles(a, a);
  CHECK(same.cycles.empty());
  CHECK(same.common.size() == 4);
}

TEST_CASE("adjacency is the single-cycle test") {
  const auto m1 = m(4, {{0, 1}, {2, 3}});
  const auto m2 = m(4, {{0, 2}, {1, 3}});
  CHECK(matching_adjacent(m1, m2));
  const auto a = m(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  const auto b = m(8, {{0, 3}, {1, 2}, {4, 7}, {5, 6}});
  CHECK_FALSE(matching_adjacent(a, b));
  CHECK_FALSE(matching_adjacent(a, a));
}

TEST_CASE("K_6 matching skeleton is complete") {
  const auto g = perfect_matching_skeleton(6);
  CHECK(g.node_count == 15);
  CHECK(g.is_complete());
}

TEST_CASE("the adjacent third matching: explicit 6-cycle walk") {
  // paper's l=3 case: cycle v0..v5, M' = {v0v3, v2v5, v4v1}
  const auto m1 = m(6, {{0, 1}, {2, 3}, {4, 5}});
  const auto m2 = m(6, {{1, 2}, {3, 4}, {5, 0}});
  const auto mp = adjacent_cycle_matching(m1, m2);
  CHECK(mp.edges() == std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}});
  // M1 delta M' visits v0, v3, v2, v5, v4, v1
  const auto dec = sym_diff_cycles(m1, mp);
  REQUIRE(dec.cycles.size() == 1);
  CHECK(dec.cycles[0] == std::vector<std::size_t>{0, 1, 4, 5, 2, 3});
}

TEST_CASE("the adjacent third matching: 8-cycle and 4-cycle") {
  const auto m1 = m(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  const auto m2 = m(8, {{1, 2}, {3, 4}, {5, 6}, {7, 0}});
  const auto mp = adjacent_cycle_matching(m1, m2);
  // l=4 even case: {v0,v2},{v3,v5} plus {v4,v7},{v6,v1}
  CHECK(mp.edges() == std::vector<Edge>{{0, 2}, {1, 6}, {3, 5}, {4, 7}});

  const auto s1 = m(4, {{0, 1}, {2, 3}});
  const auto s2 = m(4, {{1, 2}, {3, 0}});
  const auto sp = adjacent_cycle_matching(s1, s2);
  CHECK(sp.edges() == std::vector<Edge>{{0, 2}, {1, 3}});

  CHECK_THROWS_AS(adjacent_cycle_matching(m1, m1), NotAdjacent);
}

TEST_CASE("lemma contract holds for every adjacent pair of K_6 and K_8") {
  for (std::size_t nodes : {6, 8}) {
    const auto all = perfect_matchings(nodes);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        if (!matching_adjacent(all[i], all[j])) continue;
        // construction self-checks the three node-set equalities and
        // disjointness; a violation would throw
        const auto mp = adjacent_cycle_matching(all[i], all[j]);
        CHECK(matching_adjacent(mp, all[i]));
        CHECK(matching_adjacent(mp, all[j]));
      }
  }
}

TEST_CASE("components of a union multigraph") {
  const auto a = m(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  CHECK(components(a, a).count == 4);  // doubled edges
  const auto b = m(8, {{0, 3}, {1, 2}, {4, 7}, {5, 6}});
  CHECK(components(a, b).count == 2);
  const auto spanning = m(8, {{1, 2}, {3, 4}, {5, 6}, {7, 0}});
  CHECK(components(a, spanning).count == 1);
}

TEST_CASE("strip_common removes shared edges") {
  const auto m1 = m(10, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
  const auto m2 = m(10, {{0, 2}, {1, 3}, {4, 5}, {6, 7}, {8, 9}});
  const auto m3 = m(10, {{0, 3}, {1, 2}, {4, 6}, {5, 7}, {8, 9}});
  const auto stripped = strip_common(m1, m2, m3);
  CHECK(stripped.removed == std::vector<Edge>{{8, 9}});
  CHECK(stripped.m1.node_count == 8);
  CHECK_FALSE(stripped.degenerate);

  const auto id = strip_common(m1, m2, m2);
  CHECK(id.removed.size() == 3);  // {4,5},{6,7},{8,9}

  const auto all_equal = strip_common(m1, m1, m1);
  CHECK(all_equal.degenerate);
}

TEST_CASE("goodness flags") {
  const auto m1 = m(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  const auto m2 = m(8, {{1, 2}, {3, 0}, {4, 5}, {6, 7}});  // adjacent: 4-cycle 0..3
  const auto m3 = m(8, {{0, 2}, {1, 3}, {4, 6}, {5, 7}});
  CHECK_THROWS_AS(goodness(m1, m1, m3, m1), NotAdjacentBase);

  // (D) fails when the candidate equals M3
  const auto self = goodness(m3, m1, m2, m3);
  CHECK_FALSE(self.component_sum_bound);

  // a good matching constructed for the triple passes all five
  const auto good = good_matching_exists(m1, m2, m3);
  const auto rep = goodness(good, m1, m2, m3);
  CHECK(rep.good());
}

TEST_CASE("good matching exists: no outer cycle keeps the chord matching") {
  const auto m1 = m(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  const auto m2 = m(8, {{1, 2}, {3, 0}, {4, 5}, {6, 7}});
  // every M3-component meets V* = {0,1,2,3}: s = 0, nothing is spliced
  const auto m3 = m(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
  const auto good = good_matching_exists(m1, m2, m3);
  CHECK(good.edges() == std::vector<Edge>{{0, 2}, {1, 3}, {4, 5}, {6, 7}});
  CHECK(goodness(good, m1, m2, m3).good());
}

TEST_CASE("good matching exists: one outer cycle gets spliced in") {
  const auto m1 = m(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  const auto m2 = m(8, {{1, 2}, {3, 0}, {4, 5}, {6, 7}});
  // the M3-cycle on {4,5,6,7} avoids V*, so it is connected to the anchor
  const auto m3 = m(8, {{0, 2}, {1, 3}, {4, 6}, {5, 7}});
  const auto good = good_matching_exists(m1, m2, m3);
  CHECK(good.edges() == std::vector<Edge>{{0, 5}, {1, 3}, {2, 4}, {6, 7}});
  const auto rep = goodness(good, m1, m2, m3);
  CHECK(rep.good());
  // the splice merged the outer cycle with the anchor component
  for (const auto& comp : components(m3, good).node_sets) {
    bool touches = false;
    for (std::size_t v = 0; v < 4; ++v) touches |= comp.test(v);
    CHECK(touches);
  }
}

TEST_CASE("pairwise adjacent triples are rejected by the existence lemma") {
  const auto m1 = m(4, {{0, 1}, {2, 3}});
  const auto m2 = m(4, {{0, 2}, {1, 3}});
  const auto m3 = m(4, {{0, 3}, {1, 2}});
  CHECK_THROWS_AS(good_matching_exists(m1, m2, m3), PairwiseAdjacent);
}

TEST_CASE("three_common_neighbor on K_6 returns pairwise adjacent") {
  const auto all = perfect_matchings(6);
  const auto result = three_common_neighbor(all[0], all[1], all[2]);
  CHECK(result.pairwise_adjacent);  // the K_6 skeleton is complete
}

TEST_CASE("three_common_neighbor base pair must be adjacent") {
  const auto a = m(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  const auto b = m(8, {{0, 3}, {1, 2}, {4, 7}, {5, 6}});
  const auto c = m(8, {{0, 2}, {1, 3}, {4, 6}, {5, 7}});
  CHECK_THROWS_AS(three_common_neighbor(a, b, c), NotAdjacentBase);
}

TEST_CASE("three_common_neighbor: specified K_8 instances") {
  const auto m1 = m(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  const auto m2 = m(8, {{0, 3}, {1, 2}, {4, 5}, {6, 7}});
  {
    const auto m3 = m(8, {{0, 1}, {2, 3}, {4, 6}, {5, 7}});
    const auto result = three_common_neighbor(m1, m2, m3);
    REQUIRE_FALSE(result.pairwise_adjacent);
    CHECK(matching_adjacent(result.neighbor, m1));
    CHECK(matching_adjacent(result.neighbor, m2));
    CHECK(matching_adjacent(result.neighbor, m3));
  }
  {
    const auto m3 = m(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
    const auto result = three_common_neighbor(m1, m2, m3);
    REQUIRE_FALSE(result.pairwise_adjacent);
    for (const auto* base : {&m1, &m2, &m3})
      CHECK(matching_adjacent(result.neighbor, *base));
    // brute force agrees that a common neighbor exists
    CHECK(has_common_neighbor(perfect_matchings(8), m1, m2, m3));
  }
}

TEST_CASE("exhaustive K_8 sample: triples through one fixed base pair") {
  const auto all = perfect_matchings(8);
  const auto m1 = all[0];
  // first adjacent partner
  std::size_t partner = all.size();
  for (std::size_t j = 1; j < all.size(); ++j)
    if (matching_adjacent(m1, all[j])) {
      partner = j;
      break;
    }
  REQUIRE(partner != all.size());
  const auto& m2 = all[partner];
  for (const auto& m3 : all) {
    const auto result = three_common_neighbor(m1, m2, m3);
    if (result.pairwise_adjacent) {
      CHECK(matching_adjacent(m3, m1));
      CHECK(matching_adjacent(m3, m2));
    } else {
      for (const auto* base : {&m1, &m2, &m3})
        CHECK(matching_adjacent(result.neighbor, *base));
      for (const auto& step : result.trace) CHECK(step.c_before >= 2);
      // the loop variant: component count decreases by exactly one per step
      for (std::size_t i = 1; i < result.trace.size(); ++i)
        CHECK(result.trace[i].c_before == result.trace[i - 1].c_before - 1);
    }
  }
}

TEST_CASE("matching coordinates and geometric cross-check on K_6") {
  const auto all = perfect_matchings(6);
  RatMat coords;
  for (const auto& pm : all) coords.push_back(matching_coords(pm));
  const auto vp = VPolytope::from_vertices(15, coords);
  REQUIRE(vp.size() == 15);
  // the combinatorial oracle says complete; spot-check the geometry on a few pairs
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      const auto gi = vp.find(matching_coords(all[i]));
      const auto gj = vp.find(matching_coords(all[j]));
      CHECK(v_adjacency(vp, gi, gj) == matching_adjacent(all[i], all[j]));
    }
}
