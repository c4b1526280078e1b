#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "simplext/closure.hpp"
#include "simplext/errors.hpp"

#include "support.hpp"

using namespace simplext;

namespace {

SkeletonGraph path_graph(std::size_t n) {
  auto g = SkeletonGraph::empty(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SkeletonGraph cycle_graph(std::size_t n) {
  auto g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

SkeletonGraph complete_graph(std::size_t n) {
  auto g = SkeletonGraph::empty(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// Independent fixpoint oracle over bitmask subsets (n <= 16).
std::uint32_t closure_oracle(const SkeletonGraph& g, std::uint32_t w) {
  for (;;) {
    std::uint32_t next = w;
    for (std::size_t v = 0; v < g.node_count; ++v) {
      if (w & (1u << v)) continue;
      int hits = 0;
      for (std::size_t u = 0; u < g.node_count; ++u)
        if ((w & (1u << u)) && g.has_edge(u, v)) ++hits;
      if (hits >= 2) next |= 1u << v;
    }
    if (next == w) return w;
    w = next;
  }
}

std::uint32_t to_mask(const NodeSet& s) {
  std::uint32_t m = 0;
  for (auto i = s.find_first(); i != NodeSet::npos; i = s.find_next(i)) m |= 1u << i;
  return m;
}

NodeSet from_mask(std::size_t n, std::uint32_t m) {
  NodeSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (m & (1u << i)) s.set(i);
  return s;
}

}  // namespace

TEST_CASE("cn_step basics") {
  const auto p3 = path_graph(3);
  NodeSet w(3);
  w.set(0);
  w.set(2);
  CHECK(cn_step(p3, w).count() == 3);  // the middle node has two neighbors inside

  NodeSet single(3);
  single.set(1);
  CHECK(cn_step(p3, single) == single);

  const auto k3 = complete_graph(3);
  NodeSet two(3);
  two.set(0);
  two.set(1);
  CHECK(cn_step(k3, two).count() == 3);

  CHECK(cn_step(p3, NodeSet(3)).none());  // empty maps to empty
}

TEST_CASE("closure on the hexagon") {
  const auto hex = cycle_graph(6);
  const auto opposite = closure(hex, std::vector<std::size_t>{1, 4});
  CHECK(opposite.final.count() == 2);
  CHECK(opposite.proper);
  CHECK(opposite.isolated);
  CHECK(opposite.trace.size() == 1);

  const auto adjacent_pair = closure(hex, std::vector<std::size_t>{0, 1});
  CHECK(adjacent_pair.final.count() == 2);  // no common neighbor in a 6-cycle
  CHECK(adjacent_pair.proper);
  CHECK_FALSE(adjacent_pair.isolated);

  CHECK_THROWS_AS(closure(hex, NodeSet(6)), InputError);
}

TEST_CASE("closure on a complete skeleton reaches everything") {
  const auto k15 = complete_graph(15);
  const auto cert = closure(k15, std::vector<std::size_t>{3, 11});
  CHECK_FALSE(cert.proper);
  CHECK(cert.final.count() == 15);
  CHECK(cert.trace.size() == 2);
}

TEST_CASE("isolation is pairwise distance >= 3") {
  const auto c6 = cycle_graph(6);
  NodeSet w(6);
  w.set(2);
  CHECK(is_isolated(c6, w));  // singleton
  w.set(3);
  CHECK_FALSE(is_isolated(c6, w));  // adjacent pair
  w.reset(3);
  w.set(5);
  CHECK(is_isolated(c6, w));  // distance 3 in the cycle
  w.reset(5);
  w.set(4);
  CHECK_FALSE(is_isolated(c6, w));  // distance 2
}

TEST_CASE("closure agrees with the subset oracle") {
  for (const auto& g : {cycle_graph(6), path_graph(5), complete_graph(5)}) {
    for (std::uint32_t mask = 1; mask < (1u << g.node_count); ++mask) {
      const auto cert = closure(g, from_mask(g.node_count, mask));
      CHECK(to_mask(cert.final) == closure_oracle(g, mask));
    }
  }
}

TEST_CASE("closure operator laws") {
  const auto graphs = {cycle_graph(6), path_graph(6), complete_graph(4)};
  for (const auto& g : graphs) {
    const std::uint32_t full = (1u << g.node_count) - 1;
    std::vector<std::uint32_t> closed_of(full + 1);
    for (std::uint32_t m = 1; m <= full; ++m)
      closed_of[m] = to_mask(closure(g, from_mask(g.node_count, m)).final);
    for (std::uint32_t m = 1; m <= full; ++m) {
      CHECK((m & closed_of[m]) == m);                 // extensive
      CHECK(closed_of[closed_of[m]] == closed_of[m]); // idempotent
      // monotone over supersets obtained by adding one element
      for (std::size_t b = 0; b < g.node_count; ++b) {
        const std::uint32_t sup = m | (1u << b);
        CHECK((closed_of[m] & closed_of[sup]) == closed_of[m]);
      }
      // isolated sets are fixpoints
      if (is_isolated(g, from_mask(g.node_count, m))) CHECK(closed_of[m] == m);
    }
  }
}

TEST_CASE("pair sweep on the hexagon finds proper pairs") {
  const auto report = pair_closure_sweep(cycle_graph(6));
  CHECK(report.pairs_tested == 15);
  CHECK_FALSE(report.all_full());
  // every pair of a 6-cycle keeps a proper closure (arcs are closed)
  CHECK(report.full_closures == 0);

  const auto complete = pair_closure_sweep(complete_graph(7));
  CHECK(complete.all_full());
  CHECK(complete.pairs_tested == 21);
}

TEST_CASE("sweep soundness: all-full distance-2 sweep means isolated closed sets") {
  for (const auto& g : {complete_graph(6), cycle_graph(7), path_graph(6)}) {
    const auto near = pair_closure_sweep(g, true);
    const auto all = pair_closure_sweep(g, false);
    for (std::uint32_t m = 1; m < (1u << g.node_count); ++m) {
      const auto w = from_mask(g.node_count, m);
      const auto cl = closure(g, w);
      if (!cl.proper || to_mask(cl.final) != m) continue;  // want proper closed sets
      if (near.all_full()) CHECK(is_isolated(g, w));
      if (all.all_full()) CHECK(w.count() == 1);
    }
  }
}

TEST_CASE("all_closed_sets enumerates exactly the fixpoints") {
  for (const auto& g : {cycle_graph(6), path_graph(5)}) {
    const auto closed = all_closed_sets(g);
    std::set<std::uint32_t> got;
    for (const auto& s : closed) got.insert(to_mask(s));
    CHECK(got.size() == closed.size());  // no duplicates
    std::set<std::uint32_t> expected;
    for (std::uint32_t m = 0; m < (1u << g.node_count); ++m)
      if (closure_oracle(g, m) == m) expected.insert(m);
    CHECK(got == expected);
  }
}

TEST_CASE("exact cover of the hexagon is below the node count") {
  const auto result = cover_lower_bound(cycle_graph(6), CoverMode::Exact);
  CHECK(result.bound < 6);

  // oracle: brute-force minimum cover over all proper closed subsets
  const auto g = cycle_graph(6);
  std::vector<std::uint32_t> proper_closed;
  for (std::uint32_t m = 1; m < 63; ++m)
    if (closure_oracle(g, m) == m) proper_closed.push_back(m);
  std::size_t best = 6;
  for (auto a : proper_closed) {
    if (a == 63) best = std::min<std::size_t>(best, 1);
    for (auto b : proper_closed)
      if ((a | b) == 63) best = std::min<std::size_t>(best, 2);
  }
  CHECK(result.bound == best);
  CHECK(best == 2);

  // the returned cover is a genuine cover by proper closed sets
  NodeSet covered(6);
  for (const auto& s : result.cover) {
    CHECK(closure_set(g, s) == s);
    CHECK(s.count() < 6);
    covered |= s;
  }
  CHECK(covered.count() == 6);
}

TEST_CASE("cover shortcuts") {
  const auto k5 = complete_graph(5);
  const auto singleton = cover_lower_bound(k5, CoverMode::SingletonShortcut);
  CHECK(singleton.bound == 5);
  const auto exact = cover_lower_bound(k5, CoverMode::Exact);
  CHECK(exact.bound == 5);  // equals |V| exactly when all proper closed sets are singletons

  CHECK_THROWS_AS(cover_lower_bound(cycle_graph(6), CoverMode::SingletonShortcut),
                  ModeInapplicable);

  const auto degree = cover_lower_bound(complete_graph(6), CoverMode::DegreeBound);
  CHECK(degree.bound == 6);  // max degree 5 plus one
}

TEST_CASE("random 0/1 sampler") {
  // all four corners of the square: diagonals are not edges
  const auto square = sample_random_01(2, 5, 4, 0);
  CHECK(square.complete_count == 0);

  const auto r1 = sample_random_01(3, 20, 4, 7);
  const auto r2 = sample_random_01(3, 20, 4, 7);
  CHECK(r1.complete_count == r2.complete_count);  // seeded determinism
  CHECK(r1.completeness_fraction <= 1.0);
  CHECK(r1.completeness_fraction >= 0.0);

  CHECK_THROWS_AS(sample_random_01(9, 1, 4, 0), OutOfRange);
  CHECK_THROWS_AS(sample_random_01(3, 1, 9, 0), OutOfRange);
}

TEST_CASE("hypersimplex slice: every 2-seed closes fully") {
  const auto e = enumerate_vertices(test_support::hypersimplex_h(4, 2));
  const auto g = skeleton(e.vertices);
  CHECK(g.node_count == 6);
  const auto sweep = pair_closure_sweep(g);
  CHECK(sweep.all_full());
  const auto bound = cover_lower_bound(g, CoverMode::SingletonShortcut);
  CHECK(bound.bound == 6);
}
