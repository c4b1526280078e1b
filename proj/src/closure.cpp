#include "simplext/closure.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "simplext/errors.hpp"

namespace simplext {

NodeSet cn_step(const SkeletonGraph& g, const NodeSet& w) {
  NodeSet out = w;
  for (std::size_t v = 0; v < g.node_count; ++v) {
    if (w.test(v)) continue;
    if ((g.adjacency[v] & w).count() >= 2) out.set(v);
  }
  return out;
}

NodeSet closure_set(const SkeletonGraph& g, NodeSet w) {
  for (;;) {
    NodeSet next = cn_step(g, w);
    if (next == w) return w;
    w = std::move(next);
  }
}

bool is_isolated(const SkeletonGraph& g, const NodeSet& w) {
  for (auto u = w.find_first(); u != NodeSet::npos; u = w.find_next(u)) {
    // nodes within distance 2 of u
    NodeSet near = g.adjacency[u];
    for (auto x = g.adjacency[u].find_first(); x != NodeSet::npos;
         x = g.adjacency[u].find_next(x))
      near |= g.adjacency[x];
    near.reset(u);
    if ((near & w).any()) return false;
  }
  return true;
}

ClosureCertificate closure(const SkeletonGraph& g, const NodeSet& seed) {
  if (seed.none()) throw InputError("closure: empty seed");
  ClosureCertificate cert;
  cert.graph_hash = g.canonical_hash();
  cert.seed = set_to_indices(seed);
  NodeSet w = seed;
  cert.trace.push_back(w);
  for (;;) {
    NodeSet next = cn_step(g, w);
    if (next == w) break;
    cert.trace.push_back(next);
    w = std::move(next);
  }
  cert.final = w;
  cert.proper = w.count() != g.node_count;
  cert.isolated = is_isolated(g, w);
  return cert;
}

ClosureCertificate closure(const SkeletonGraph& g, const std::vector<std::size_t>& seed) {
  return closure(g, indices_to_set(g.node_count, seed));
}

PairSweepReport pair_closure_sweep(const SkeletonGraph& g, bool distance_le2_only,
                                   const Budgets& budgets) {
  if (g.node_count > budgets.max_sweep_nodes)
    throw TooLarge("pair_closure_sweep: node budget exceeded");
  PairSweepReport report;
  report.node_count = g.node_count;
  report.distance_le2_only = distance_le2_only;
  report.justification =
      distance_le2_only
          ? "a proper closed set containing two nodes at distance <= 2 would contain "
            "their closure; all such pairs close to the full set, so every proper "
            "closed set is isolated"
          : "every pair closes to the full vertex set, so every proper closed set "
            "is a singleton";
  NodeSet full(g.node_count);
  full.set();
  for (std::size_t u = 0; u < g.node_count; ++u) {
    std::vector<int> dist;
    if (distance_le2_only) dist = g.distances_from(u);
    for (std::size_t v = u + 1; v < g.node_count; ++v) {
      if (distance_le2_only && (dist[v] < 0 || dist[v] > 2)) continue;
      ++report.pairs_tested;
      NodeSet seed(g.node_count);
      seed.set(u);
      seed.set(v);
      if (closure_set(g, std::move(seed)) == full)
        ++report.full_closures;
      else
        report.counterexamples.emplace_back(u, v);
    }
  }
  return report;
}

namespace {

// Lectically next closed set (Ganter); bit 0 is the smallest element.
bool next_closed(const SkeletonGraph& g, const NodeSet& a, NodeSet& out) {
  const std::size_t n = g.node_count;
  for (std::size_t ii = n; ii-- > 0;) {
    if (a.test(ii)) continue;
    NodeSet seed(n);
    for (std::size_t j = 0; j < ii; ++j)
      if (a.test(j)) seed.set(j);
    seed.set(ii);
    NodeSet b = closure_set(g, std::move(seed));
    const NodeSet fresh = b - a;
    if (fresh.find_first() == ii) {
      out = std::move(b);
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<NodeSet> all_closed_sets(const SkeletonGraph& g, const Budgets& budgets) {
  std::vector<NodeSet> closed;
  NodeSet a(g.node_count);  // closure of the empty set is empty
  closed.push_back(a);
  NodeSet next;
  while (next_closed(g, a, next)) {
    closed.push_back(next);
    if (closed.size() > budgets.max_closed_sets)
      throw TooLarge("all_closed_sets: closed-set budget exceeded");
    a = std::move(next);
  }
  return closed;
}

namespace {

struct CoverSearch {
  std::size_t n;
  const std::vector<NodeSet>& sets;
  NodeSet full;
  std::vector<std::size_t> best_choice;
  std::size_t best;

  std::vector<NodeSet> greedy() const {
    NodeSet covered(n);
    std::vector<NodeSet> chosen;
    while (covered != full) {
      std::size_t pick = sets.size();
      std::size_t gain = 0;
      for (std::size_t i = 0; i < sets.size(); ++i) {
        const std::size_t add = (sets[i] - covered).count();
        if (add > gain) {
          gain = add;
          pick = i;
        }
      }
      covered |= sets[pick];
      chosen.push_back(sets[pick]);
    }
    return chosen;
  }

  void search(NodeSet covered, std::vector<std::size_t>& chosen) {
    if (covered == full) {
      if (chosen.size() < best) {
        best = chosen.size();
        best_choice = chosen;
      }
      return;
    }
    if (chosen.size() + 1 >= best) return;
    // branch on the uncovered element with the fewest candidate sets
    std::size_t elem = NodeSet::npos;
    std::size_t fewest = sets.size() + 1;
    const NodeSet uncovered = full - covered;
    for (auto e = uncovered.find_first(); e != NodeSet::npos; e = uncovered.find_next(e)) {
      std::size_t cnt = 0;
      for (const auto& s : sets)
        if (s.test(e)) ++cnt;
      if (cnt < fewest) {
        fewest = cnt;
        elem = e;
      }
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (!sets[i].test(elem)) continue;
      chosen.push_back(i);
      search(covered | sets[i], chosen);
      chosen.pop_back();
    }
  }
};

}  // namespace

CoverResult cover_lower_bound(const SkeletonGraph& g, CoverMode mode, const Budgets& budgets) {
  CoverResult result;
  result.mode = mode;
  switch (mode) {
    case CoverMode::SingletonShortcut: {
      result.sweep = pair_closure_sweep(g, false, budgets);
      if (!result.sweep.all_full())
        throw ModeInapplicable(
            "a pair with proper closure exists; the singleton shortcut does not apply");
      result.bound = g.node_count;
      return result;
    }
    case CoverMode::DegreeBound: {
      result.sweep = pair_closure_sweep(g, true, budgets);
      if (!result.sweep.all_full())
        throw ModeInapplicable(
            "a distance-<=2 pair with proper closure exists; the isolation bound "
            "does not apply");
      result.max_degree = g.max_degree();
      result.bound = result.max_degree + 1;
      return result;
    }
    case CoverMode::Exact:
      break;
  }
  const auto closed = all_closed_sets(g, budgets);
  NodeSet full(g.node_count);
  full.set();
  std::vector<NodeSet> proper;
  for (const auto& s : closed)
    if (s.any() && s != full) proper.push_back(s);
  // keep the inclusion-maximal ones; any cover can be enlarged to them
  std::vector<NodeSet> maximal;
  for (const auto& s : proper) {
    bool dominated = false;
    for (const auto& t : proper)
      if (s != t && s.is_subset_of(t)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(s);
  }
  std::sort(maximal.begin(), maximal.end());
  CoverSearch bb{g.node_count, maximal, full, {}, 0};
  const auto ub = bb.greedy();
  bb.best = ub.size();
  for (const auto& s : ub) {
    const auto it = std::find(maximal.begin(), maximal.end(), s);
    bb.best_choice.push_back(static_cast<std::size_t>(it - maximal.begin()));
  }
  std::vector<std::size_t> chosen;
  bb.search(NodeSet(g.node_count), chosen);
  result.bound = bb.best;
  for (auto i : bb.best_choice) result.cover.push_back(maximal[i]);
  return result;
}

Random01Report sample_random_01(std::size_t d, std::size_t count, std::size_t vertex_budget,
                                std::uint64_t seed, double sigma) {
  if (d == 0 || d > 8) throw OutOfRange("sample_random_01: d must be in 1..8");
  const std::size_t cube = std::size_t{1} << d;
  if (vertex_budget < 2 || vertex_budget > cube)
    throw OutOfRange("sample_random_01: vertex budget must be in 2..2^d");
  Random01Report report;
  report.dim = d;
  report.samples = count;
  report.vertices_per_sample = vertex_budget;
  report.sigma = sigma;
  report.within_sigma_regime =
      static_cast<double>(vertex_budget) <= std::pow(2.0, sigma * static_cast<double>(d));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, cube - 1);
  for (std::size_t s = 0; s < count; ++s) {
    std::set<std::size_t> masks;
    while (masks.size() < vertex_budget) masks.insert(pick(rng));
    RatMat pts;
    for (auto m : masks) {
      RatVec p(d);
      for (std::size_t i = 0; i < d; ++i) p[i] = Rat((m >> i) & 1);
      pts.push_back(std::move(p));
    }
    // 0/1 points are always vertices of their own hull
    const auto v = VPolytope::from_vertices(d, std::move(pts));
    bool complete = true;
    for (std::size_t i = 0; i < v.size() && complete; ++i)
      for (std::size_t j = i + 1; j < v.size() && complete; ++j)
        if (!v_adjacency(v, i, j)) complete = false;
    if (complete) ++report.complete_count;
  }
  report.completeness_fraction =
      count == 0 ? 0.0 : static_cast<double>(report.complete_count) / static_cast<double>(count);
  return report;
}

}  // namespace simplext
