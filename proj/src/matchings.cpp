#include "simplext/matchings.hpp"

#include <algorithm>
#include <sstream>

#include "simplext/errors.hpp"

namespace simplext {

namespace {

Edge ordered(std::size_t u, std::size_t v) { return u < v ? Edge{u, v} : Edge{v, u}; }

std::size_t delta_size(const Matching& a, const Matching& b) {
  std::size_t cnt = 0;
  for (std::size_t v = 0; v < a.node_count; ++v)
    if (a.partner[v] != b.partner[v]) ++cnt;  // counts nodes, = |delta| edges
  return cnt;
}

NodeSet delta_nodes(const Matching& a, const Matching& b) {
  NodeSet s(a.node_count);
  for (std::size_t v = 0; v < a.node_count; ++v)
    if (a.partner[v] != b.partner[v]) s.set(v);
  return s;
}

}  // namespace

Matching Matching::from_edges(std::size_t nodes, const std::vector<Edge>& edges) {
  if (nodes % 2 != 0) throw InputError("matching: odd node count");
  if (edges.size() * 2 != nodes) throw InputError("matching: not perfect");
  Matching m;
  m.node_count = nodes;
  m.partner.assign(nodes, nodes);
  for (const auto& [u, v] : edges) {
    if (u >= nodes || v >= nodes || u == v) throw InputError("matching: bad edge");
    if (m.partner[u] != nodes || m.partner[v] != nodes)
      throw InputError("matching: node covered twice");
    m.partner[u] = v;
    m.partner[v] = u;
  }
  return m;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < node_count; ++v)
    if (v < partner[v]) out.emplace_back(v, partner[v]);
  return out;
}

std::vector<Matching> perfect_matchings(std::size_t nodes) {
  if (nodes % 2 != 0 || nodes < 2 || nodes > 10)
    throw OutOfRange("perfect_matchings: node count must be even, 2..10");
  std::vector<Matching> out;
  std::vector<std::size_t> partner(nodes, nodes);
  auto rec = [&](auto&& self) -> void {
    std::size_t u = 0;
    while (u < nodes && partner[u] != nodes) ++u;
    if (u == nodes) {
      Matching m;
      m.node_count = nodes;
      m.partner = partner;
      out.push_back(std::move(m));
      return;
    }
    for (std::size_t v = u + 1; v < nodes; ++v) {
      if (partner[v] != nodes) continue;
      partner[u] = v;
      partner[v] = u;
      self(self);
      partner[u] = nodes;
      partner[v] = nodes;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

AlternatingDecomposition sym_diff_cycles(const Matching& m1, const Matching& m2) {
  if (m1.node_count != m2.node_count) throw InputError("matchings on different node sets");
  AlternatingDecomposition dec;
  for (std::size_t v = 0; v < m1.node_count; ++v)
    if (m1.partner[v] == m2.partner[v] && v < m1.partner[v])
      dec.common.emplace_back(v, m1.partner[v]);
  std::vector<bool> done(m1.node_count, false);
  for (std::size_t start = 0; start < m1.node_count; ++start) {
    if (done[start] || m1.partner[start] == m2.partner[start]) continue;
    std::vector<std::size_t> cycle;
    std::size_t v = start;
    bool via_m1 = true;  // {v_0, v_1} is the M1-edge at the smallest node
    do {
      cycle.push_back(v);
      done[v] = true;
      v = via_m1 ? m1.partner[v] : m2.partner[v];
      via_m1 = !via_m1;
    } while (v != start);
    dec.cycles.push_back(std::move(cycle));
  }
  return dec;
}

bool matching_adjacent(const Matching& m1, const Matching& m2) {
  if (m1.node_count != m2.node_count) throw InputError("matchings on different node sets");
  std::size_t cycles = 0, visited = 0;
  std::vector<bool> done(m1.node_count, false);
  for (std::size_t start = 0; start < m1.node_count; ++start) {
    if (done[start] || m1.partner[start] == m2.partner[start]) continue;
    ++cycles;
    if (cycles > 1) return false;
    std::size_t v = start;
    bool via_m1 = true;
    do {
      done[v] = true;
      ++visited;
      v = via_m1 ? m1.partner[v] : m2.partner[v];
      via_m1 = !via_m1;
    } while (v != start);
  }
  (void)visited;
  return cycles == 1;
}

Matching adjacent_cycle_matching(const Matching& m1, const Matching& m2) {
  const auto dec = sym_diff_cycles(m1, m2);
  if (dec.cycles.size() != 1) throw NotAdjacent("adjacent_cycle_matching: pair not adjacent");
  const auto& c = dec.cycles[0];
  const std::size_t len = c.size();  // 2l
  const std::size_t l = len / 2;
  std::vector<Edge> edges = dec.common;
  auto at = [&](std::size_t i) { return c[i % len]; };
  if (l == 2) {
    // the even-l formula needs l >= 4; the 4-cycle has a unique chord matching
    edges.push_back(ordered(at(0), at(2)));
    edges.push_back(ordered(at(1), at(3)));
  } else if (l % 2 == 1) {
    for (std::size_t i = 0; i < len; i += 2) edges.push_back(ordered(at(i), at(i + 3)));
  } else {
    for (std::size_t i = 4; i <= len - 2; i += 2) edges.push_back(ordered(at(i), at(i + 3)));
    edges.push_back(ordered(at(0), at(2)));
    edges.push_back(ordered(at(3), at(5)));
  }
  Matching mp = Matching::from_edges(m1.node_count, edges);
  // Lemma contract: adjacent to both, same covered node set, no cycle edge reused.
  if (!matching_adjacent(mp, m1) || !matching_adjacent(mp, m2))
    throw InternalInvariantViolation("adjacent_cycle_matching: adjacency lost");
  const NodeSet vstar = delta_nodes(m1, m2);
  if (delta_nodes(m1, mp) != vstar || delta_nodes(m2, mp) != vstar)
    throw InternalInvariantViolation("adjacent_cycle_matching: node set changed");
  for (std::size_t i = 0; i < len; ++i) {
    const auto u = at(i), v = at(i + 1);
    if (mp.has_edge(u, v))
      throw InternalInvariantViolation("adjacent_cycle_matching: cycle edge reused");
  }
  return mp;
}

Components components(const Matching& m3, const Matching& mp) {
  if (m3.node_count != mp.node_count) throw InputError("matchings on different node sets");
  const std::size_t n = m3.node_count;
  Components out;
  out.component_of.assign(n, n);
  std::size_t next = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (out.component_of[start] != n) continue;
    NodeSet comp(n);
    std::vector<std::size_t> stack{start};
    out.component_of[start] = next;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      comp.set(v);
      for (const auto w : {m3.partner[v], mp.partner[v]}) {
        if (out.component_of[w] == n) {
          out.component_of[w] = next;
          stack.push_back(w);
        }
      }
    }
    out.node_sets.push_back(std::move(comp));
    ++next;
  }
  out.count = next;
  return out;
}

GoodnessReport goodness(const Matching& mp, const Matching& m1, const Matching& m2,
                        const Matching& m3) {
  if (!matching_adjacent(m1, m2)) throw NotAdjacentBase("goodness: base pair not adjacent");
  GoodnessReport rep;
  const NodeSet vstar = delta_nodes(m1, m2);
  const auto comps = components(m3, mp);
  rep.component_count = comps.count;
  const std::size_t c = comps.count;

  rep.adjacent_to_base_pair = matching_adjacent(mp, m1) && matching_adjacent(mp, m2);
  if (!rep.adjacent_to_base_pair) rep.witness = "(A) not adjacent to both base matchings";

  rep.components_touch_cycle = true;
  for (const auto& s : comps.node_sets) {
    if (!(s & vstar).any()) {
      rep.components_touch_cycle = false;
      if (rep.witness.empty()) {
        std::ostringstream os;
        os << "(B) component {";
        for (auto v = s.find_first(); v != NodeSet::npos; v = s.find_next(v)) os << " " << v;
        os << " } misses the base cycle";
        rep.witness = os.str();
      }
      break;
    }
  }

  rep.cycle_edges_in_one_component = true;
  std::size_t holder = comps.count;
  for (std::size_t v = 0; v < mp.node_count; ++v) {
    const auto w = mp.partner[v];
    if (v > w) continue;
    const bool on_cycle = vstar.test(v) && vstar.test(w) &&
                          (m1.has_edge(v, w) != m2.has_edge(v, w));
    if (!on_cycle) continue;
    if (holder == comps.count) {
      holder = comps.component_of[v];
    } else if (comps.component_of[v] != holder) {
      rep.cycle_edges_in_one_component = false;
      if (rep.witness.empty()) rep.witness = "(C) base-cycle edges split across components";
      break;
    }
  }

  const std::size_t d1 = delta_size(m1, mp), d2 = delta_size(m2, mp);
  rep.component_sum_bound = !(m3 == mp) && 2 * c + 6 <= d1 + d2;
  if (!rep.component_sum_bound && rep.witness.empty())
    rep.witness = "(D) component count exceeds the difference bound";

  rep.per_side_bound = true;
  for (std::size_t j = 1; j <= 2; ++j) {
    const std::size_t dj = j == 1 ? d1 : d2;
    const Matching& mk = j == 1 ? m2 : m1;
    if (2 * c > dj) {
      rep.per_side_bound = false;
    } else if (2 * c == dj && !vstar.is_subset_of(delta_nodes(mk, mp))) {
      rep.per_side_bound = false;
    }
    if (!rep.per_side_bound) {
      if (rep.witness.empty()) rep.witness = "(E) per-side component bound fails";
      break;
    }
  }
  return rep;
}

StrippedTriple strip_common(const Matching& m1, const Matching& m2, const Matching& m3) {
  const std::size_t n = m1.node_count;
  StrippedTriple out;
  NodeSet keep(n);
  keep.set();
  for (std::size_t v = 0; v < n; ++v) {
    if (m1.partner[v] == m2.partner[v] && m2.partner[v] == m3.partner[v]) {
      keep.reset(v);
      if (v < m1.partner[v]) out.removed.emplace_back(v, m1.partner[v]);
    }
  }
  out.original_node = set_to_indices(keep);
  out.degenerate = out.original_node.empty();
  std::vector<std::size_t> new_id(n, n);
  for (std::size_t i = 0; i < out.original_node.size(); ++i) new_id[out.original_node[i]] = i;
  auto restrict_matching = [&](const Matching& m) {
    Matching r;
    r.node_count = out.original_node.size();
    r.partner.resize(r.node_count);
    for (std::size_t i = 0; i < r.node_count; ++i)
      r.partner[i] = new_id[m.partner[out.original_node[i]]];
    return r;
  };
  out.m1 = restrict_matching(m1);
  out.m2 = restrict_matching(m2);
  out.m3 = restrict_matching(m3);
  return out;
}

Matching good_matching_exists(const Matching& m1, const Matching& m2, const Matching& m3) {
  if (!matching_adjacent(m1, m2))
    throw NotAdjacentBase("good_matching_exists: base pair not adjacent");
  if (matching_adjacent(m3, m1) && matching_adjacent(m3, m2))
    throw PairwiseAdjacent("good_matching_exists: triple is pairwise adjacent");
  for (std::size_t v = 0; v < m1.node_count; ++v)
    if (m1.partner[v] == m2.partner[v] && m2.partner[v] == m3.partner[v])
      throw InputError("good_matching_exists: common edges not stripped");

  const Matching mbar = adjacent_cycle_matching(m1, m2);
  const NodeSet vstar = delta_nodes(m1, m2);

  // outer cycles: components of M3 u Mbar disjoint from the base cycle
  const auto comps = components(m3, mbar);
  std::vector<Edge> splice;  // {u_i, v_i} per outer cycle, smallest Mbar-edge
  for (const auto& s : comps.node_sets) {
    if ((s & vstar).any()) continue;
    Edge best{m1.node_count, m1.node_count};
    for (auto v = s.find_first(); v != NodeSet::npos; v = s.find_next(v)) {
      const auto w = mbar.partner[v];
      if (v < w) best = std::min(best, Edge{v, w});
    }
    splice.push_back(best);
  }
  std::sort(splice.begin(), splice.end());

  Edge anchor{m1.node_count, m1.node_count};  // smallest Mbar-edge inside V*
  for (auto v = vstar.find_first(); v != NodeSet::npos; v = vstar.find_next(v)) {
    const auto w = mbar.partner[v];
    if (v < w) anchor = std::min(anchor, Edge{v, w});
  }

  Matching mp = mbar;
  if (!splice.empty()) {
    std::vector<Edge> chain{anchor};
    chain.insert(chain.end(), splice.begin(), splice.end());
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const auto [ui, vi] = chain[i];
      const auto vnext = chain[(i + 1) % chain.size()].second;
      mp.partner[ui] = vnext;
      mp.partner[vnext] = ui;
      (void)vi;
    }
  }
  const auto rep = goodness(mp, m1, m2, m3);
  if (!rep.good())
    throw InternalInvariantViolation("good_matching_exists: constructed matching not good: " +
                                     rep.witness);
  return mp;
}

namespace {

// Order of first appearance of a and b on the walk along Mk delta M'
// starting at u1 via the M'-edge f1.
bool comes_first(const Matching& mk, const Matching& mp, std::size_t u1, std::size_t a,
                 std::size_t b) {
  std::size_t v = mp.partner[u1];  // after traversing f1
  bool via_mk = true;
  while (true) {
    if (v == a) return true;
    if (v == b) return false;
    v = via_mk ? mk.partner[v] : mp.partner[v];
    via_mk = !via_mk;
    if (v == u1) throw InternalInvariantViolation("walk returned before finding both nodes");
  }
}

}  // namespace

CommonNeighborResult three_common_neighbor(const Matching& m1, const Matching& m2,
                                           const Matching& m3) {
  if (!matching_adjacent(m1, m2))
    throw NotAdjacentBase("three_common_neighbor: M1 and M2 must be adjacent");
  CommonNeighborResult result;
  if (matching_adjacent(m3, m1) && matching_adjacent(m3, m2)) {
    result.pairwise_adjacent = true;
    return result;
  }

  const auto stripped = strip_common(m1, m2, m3);
  const Matching &r1 = stripped.m1, &r2 = stripped.m2, &r3 = stripped.m3;
  Matching mp = good_matching_exists(r1, r2, r3);

  for (;;) {
    auto comps = components(r3, mp);
    const std::size_t c = comps.count;
    if (c <= 1) break;

    // the component holding all M' edges on the base cycle, if any exist
    std::size_t hat = comps.count;
    for (std::size_t v = 0; v < mp.node_count; ++v) {
      const auto w = mp.partner[v];
      if (v > w) continue;
      if (r1.has_edge(v, w) != r2.has_edge(v, w)) {
        hat = comps.component_of[v];
        break;
      }
    }

    // connector e in Mj \ Mk joining the hat component to another one,
    // chosen to maximize |Mj delta M'|; ties by (j, endpoints)
    const std::size_t d1 = delta_size(r1, mp), d2 = delta_size(r2, mp);
    Edge e{mp.node_count, mp.node_count};
    std::size_t side = 0, best_weight = 0;
    for (std::size_t j = 1; j <= 2; ++j) {
      const Matching& mj = j == 1 ? r1 : r2;
      const Matching& mk = j == 1 ? r2 : r1;
      const std::size_t weight = j == 1 ? d1 : d2;
      for (std::size_t v = 0; v < mp.node_count; ++v) {
        const auto w = mj.partner[v];
        if (v > w || mk.has_edge(v, w)) continue;
        if (comps.component_of[v] == comps.component_of[w]) continue;
        if (hat != comps.count && comps.component_of[v] != hat &&
            comps.component_of[w] != hat)
          continue;
        const Edge cand{v, w};
        if (side == 0 || weight > best_weight ||
            (weight == best_weight && std::tie(j, cand) < std::tie(side, e))) {
          e = cand;
          side = j;
          best_weight = weight;
        }
      }
    }
    if (side == 0)
      throw InternalInvariantViolation("no connector between components found");

    const Matching& mk = side == 1 ? r2 : r1;
    if (best_weight < 6)
      throw InternalInvariantViolation("connector side difference below 6");

    // u1 lies in the hat component (or the smaller-id endpoint when no
    // base-cycle edge pins one down)
    std::size_t u1 = e.first, u2 = e.second;
    if (hat != comps.count && comps.component_of[u1] != hat) std::swap(u1, u2);
    const std::size_t v1 = mp.partner[u1], v2 = mp.partner[u2];

    const bool f1_in_mk = mk.has_edge(u1, v1);
    const bool case1 = !f1_in_mk && comes_first(mk, mp, u1, u2, v2);

    ExchangeStep step;
    step.c_before = c;
    step.component = hat == comps.count ? comps.component_of[u1] : hat;
    step.connector = e;
    step.side = side;
    step.case_tag = case1 ? 1 : 2;
    step.removed_f1 = ordered(u1, v1);
    step.removed_f2 = ordered(u2, v2);

    if (case1) {
      mp.partner[u1] = u2;
      mp.partner[u2] = u1;
      mp.partner[v1] = v2;
      mp.partner[v2] = v1;
      step.added = {ordered(u1, u2), ordered(v1, v2)};
    } else {
      mp.partner[u1] = v2;
      mp.partner[v2] = u1;
      mp.partner[u2] = v1;
      mp.partner[v1] = u2;
      step.added = {ordered(u1, v2), ordered(u2, v1)};
    }

    const auto rep = goodness(mp, r1, r2, r3);
    if (!rep.good())
      throw InternalInvariantViolation("exchange broke goodness: " + rep.witness);
    if (rep.component_count != c - 1)
      throw InternalInvariantViolation("component count did not drop by one");
    result.trace.push_back(std::move(step));
  }

  // map back to the original labeling and restore stripped edges
  std::vector<Edge> edges = stripped.removed;
  for (const auto& [u, v] : mp.edges())
    edges.push_back(ordered(stripped.original_node[u], stripped.original_node[v]));
  result.neighbor = Matching::from_edges(m1.node_count, edges);
  for (const Matching* m : {&m1, &m2, &m3})
    if (!matching_adjacent(result.neighbor, *m))
      throw InternalInvariantViolation("constructed neighbor not adjacent to the triple");
  return result;
}

SkeletonGraph perfect_matching_skeleton(std::size_t nodes, const Budgets& budgets) {
  const auto all = perfect_matchings(nodes);
  if (all.size() > budgets.max_sweep_nodes)
    throw TooLarge("perfect_matching_skeleton: node budget exceeded");
  SkeletonGraph g = SkeletonGraph::empty(all.size());
  g.node_labels.reserve(all.size());
  for (const auto& m : all) g.node_labels.push_back(matching_label(m));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (matching_adjacent(all[i], all[j])) g.add_edge(i, j);
  return g;
}

RatVec matching_coords(const Matching& m) {
  const std::size_t n = m.node_count;
  RatVec x;
  x.reserve(n * (n - 1) / 2);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) x.push_back(Rat(m.has_edge(u, v) ? 1 : 0));
  return x;
}

std::string matching_label(const Matching& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, v] : m.edges()) {
    if (!first) os << " ";
    first = false;
    os << u << "-" << v;
  }
  return os.str();
}

}  // namespace simplext
