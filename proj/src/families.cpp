#include "simplext/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "simplext/errors.hpp"

namespace simplext {

std::vector<NodeSet> hypersimplex_vertices(std::size_t n, std::size_t k, const Budgets& budgets) {
  if (n == 0 || n > 63 || k < 1 || k > n - 1)
    throw OutOfRange("hypersimplex_vertices: need 1 <= k <= n-1");
  std::vector<NodeSet> out;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  for (;;) {
    out.push_back(indices_to_set(n, pick));
    if (out.size() > budgets.max_vertices)
      throw TooLarge("hypersimplex_vertices: vertex budget exceeded");
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  // lexicographic order of the characteristic vectors, matching the
  // canonical vertex order of the geometric polytope
  std::sort(out.begin(), out.end(), [n](const NodeSet& a, const NodeSet& b) {
    for (std::size_t i = 0; i < n; ++i)
      if (a.test(i) != b.test(i)) return b.test(i);
    return false;
  });
  return out;
}

bool hypersimplex_adjacent(const NodeSet& u, const NodeSet& w) {
  return (u ^ w).count() == 2;
}

SkeletonGraph hypersimplex_skeleton(std::size_t n, std::size_t k, const Budgets& budgets) {
  const auto verts = hypersimplex_vertices(n, k, budgets);
  SkeletonGraph g = SkeletonGraph::empty(verts.size());
  g.node_labels.reserve(verts.size());
  for (const auto& v : verts) {
    std::string label(n, '0');
    for (auto i = v.find_first(); i != NodeSet::npos; i = v.find_next(i)) label[i] = '1';
    g.node_labels.push_back(label);
  }
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (hypersimplex_adjacent(verts[i], verts[j])) g.add_edge(i, j);
  return g;
}

RatVec bitvector_coords(const NodeSet& v) {
  RatVec x(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) x[i] = Rat(v.test(i) ? 1 : 0);
  return x;
}

namespace {

std::vector<Edge> complete_graph_edges(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return edges;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

std::vector<EdgeSet> spanning_trees(std::size_t n) {
  if (n < 3 || n > 7) throw OutOfRange("spanning_trees: n must be in 3..7");
  const auto edges = complete_graph_edges(n);
  const std::size_t m = edges.size(), need = n - 1;
  std::vector<EdgeSet> out;
  std::vector<std::size_t> pick(need);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  for (;;) {
    UnionFind uf(n);
    bool acyclic = true;
    for (auto idx : pick)
      if (!uf.unite(edges[idx].first, edges[idx].second)) {
        acyclic = false;
        break;
      }
    if (acyclic) {
      EdgeSet t;
      for (auto idx : pick) t.push_back(edges[idx]);
      out.push_back(std::move(t));
    }
    std::size_t i = need;
    while (i > 0 && pick[i - 1] == m - need + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

bool tree_adjacent(const EdgeSet& t1, const EdgeSet& t2) {
  EdgeSet diff;
  std::set_symmetric_difference(t1.begin(), t1.end(), t2.begin(), t2.end(),
                                std::back_inserter(diff));
  return diff.size() == 2;
}

SkeletonGraph spanning_tree_skeleton(std::size_t n) {
  const auto trees = spanning_trees(n);
  SkeletonGraph g = SkeletonGraph::empty(trees.size());
  g.node_labels.reserve(trees.size());
  for (const auto& t : trees) {
    std::ostringstream os;
    for (const auto& [u, v] : t) os << u << "-" << v << " ";
    auto s = os.str();
    if (!s.empty()) s.pop_back();
    g.node_labels.push_back(s);
  }
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = i + 1; j < trees.size(); ++j)
      if (tree_adjacent(trees[i], trees[j])) g.add_edge(i, j);
  return g;
}

std::size_t tree_skeleton_max_degree(std::size_t n) {
  std::size_t best = 0;
  for (const auto& tree : spanning_trees(n)) {
    std::size_t degree = 0;
    for (std::size_t drop = 0; drop < tree.size(); ++drop) {
      UnionFind uf(n);
      for (std::size_t i = 0; i < tree.size(); ++i)
        if (i != drop) uf.unite(tree[i].first, tree[i].second);
      std::size_t part = 0;
      const std::size_t root = uf.find(tree[drop].first);
      for (std::size_t v = 0; v < n; ++v)
        if (uf.find(v) == root) ++part;
      degree += part * (n - part) - 1;
    }
    best = std::max(best, degree);
  }
  return best;
}

EdgeSet build_tw(std::size_t n, std::size_t s, std::size_t t,
                 const std::vector<std::size_t>& w) {
  if (s >= n || t >= n || s == t) throw BadW("build_tw: bad terminals");
  if (w.size() != n / 2) throw BadW("build_tw: |W| must be floor(n/2)");
  std::vector<bool> used(n, false);
  used[s] = used[t] = true;
  for (auto v : w) {
    if (v >= n || used[v]) throw BadW("build_tw: W must be distinct nodes avoiding s,t");
    used[v] = true;
  }
  EdgeSet tree;
  auto push = [&tree](std::size_t a, std::size_t b) {
    tree.emplace_back(std::min(a, b), std::max(a, b));
  };
  push(s, w.front());
  for (std::size_t i = 0; i + 1 < w.size(); ++i) push(w[i], w[i + 1]);
  push(w.back(), t);
  for (std::size_t v = 0; v < n; ++v)
    if (!used[v]) push(t, v);
  std::sort(tree.begin(), tree.end());
  return tree;
}

EdgeSet edges_within(const EdgeSet& edges, const NodeSet& u) {
  EdgeSet out;
  for (const auto& e : edges)
    if (u.test(e.first) && u.test(e.second)) out.push_back(e);
  return out;
}

EdgeSet edges_cut(const EdgeSet& edges, const NodeSet& u) {
  EdgeSet out;
  for (const auto& e : edges)
    if (u.test(e.first) != u.test(e.second)) out.push_back(e);
  return out;
}

FacetStatus subtour_facet_check(const EdgeSet& tree, const NodeSet& u) {
  if (u.count() < 2) throw OutOfRange("subtour_facet_check: |U| must be >= 2");
  const std::size_t inside = edges_within(tree, u).size();
  const std::size_t bound = u.count() - 1;
  if (inside == bound) return FacetStatus::Tight;
  return inside < bound ? FacetStatus::Slack : FacetStatus::Violated;
}

RatVec tree_coords(std::size_t n, const EdgeSet& tree) {
  const auto edges = complete_graph_edges(n);
  RatVec x(edges.size(), Rat(0));
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (std::binary_search(tree.begin(), tree.end(), edges[i])) x[i] = 1;
  return x;
}

DagDesc DagDesc::make(std::size_t nodes, std::vector<Arc> arcs, std::size_t s, std::size_t t) {
  if (s >= nodes || t >= nodes || s == t) throw InputError("dag: bad source/sink");
  for (const auto& [u, v] : arcs) {
    if (u >= nodes || v >= nodes) throw InputError("dag: arc endpoint out of range");
    if (u == v) throw InputError("dag: loop arc");
  }
  // Kahn's algorithm certifies acyclicity
  std::vector<std::size_t> indeg(nodes, 0);
  for (const auto& [u, v] : arcs) ++indeg[v];
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < nodes; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::size_t seen = 0;
  while (!queue.empty()) {
    const auto u = queue.back();
    queue.pop_back();
    ++seen;
    for (std::size_t a = 0; a < arcs.size(); ++a)
      if (arcs[a].first == u && --indeg[arcs[a].second] == 0) queue.push_back(arcs[a].second);
  }
  if (seen != nodes) throw InputError("dag: directed cycle detected");

  DagDesc d;
  d.node_count = nodes;
  d.arcs = std::move(arcs);
  d.source = s;
  d.sink = t;
  // arc is live iff its tail is reachable from s and its head reaches t
  std::vector<bool> from_s(nodes, false), to_t(nodes, false);
  from_s[s] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [u, v] : d.arcs)
      if (from_s[u] && !from_s[v]) {
        from_s[v] = true;
        changed = true;
      }
  }
  to_t[t] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [u, v] : d.arcs)
      if (to_t[v] && !to_t[u]) {
        to_t[u] = true;
        changed = true;
      }
  }
  d.arc_live.resize(d.arcs.size());
  for (std::size_t a = 0; a < d.arcs.size(); ++a)
    d.arc_live[a] = from_s[d.arcs[a].first] && to_t[d.arcs[a].second];
  return d;
}

std::vector<ArcSet> st_paths(const DagDesc& dag, const Budgets& budgets) {
  std::vector<std::vector<std::size_t>> out_arcs(dag.node_count);
  for (std::size_t a = 0; a < dag.arcs.size(); ++a)
    if (dag.arc_live[a]) out_arcs[dag.arcs[a].first].push_back(a);
  std::vector<ArcSet> paths;
  ArcSet current;
  auto dfs = [&](auto&& self, std::size_t v) -> void {
    if (v == dag.sink) {
      paths.push_back(current);
      if (paths.size() > budgets.max_paths) throw TooLarge("st_paths: path budget exceeded");
      return;
    }
    for (auto a : out_arcs[v]) {
      current.push_back(a);
      self(self, dag.arcs[a].second);
      current.pop_back();
    }
  };
  dfs(dfs, dag.source);
  return paths;
}

namespace {

// Nodes visited by the arc segment, excluding its first and last node.
std::vector<std::size_t> inner_nodes(const DagDesc& dag, const ArcSet& path, std::size_t lo,
                                     std::size_t hi) {
  std::vector<std::size_t> nodes;  // heads of all segment arcs but the last
  for (std::size_t i = lo; i < hi; ++i) nodes.push_back(dag.arcs[path[i]].second);
  return nodes;
}

}  // namespace

bool path_adjacent(const DagDesc& dag, const ArcSet& p1, const ArcSet& p2) {
  if (p1 == p2) return false;
  const std::vector<bool> in2 = [&] {
    std::vector<bool> f(dag.arcs.size(), false);
    for (auto a : p2) f[a] = true;
    return f;
  }();
  const std::vector<bool> in1 = [&] {
    std::vector<bool> f(dag.arcs.size(), false);
    for (auto a : p1) f[a] = true;
    return f;
  }();
  auto segment = [&](const ArcSet& p, const std::vector<bool>& in_other,
                     std::size_t& lo, std::size_t& hi) {
    lo = p.size();
    hi = 0;
    bool inside = false, closed = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!in_other[p[i]]) {
        if (closed) return false;  // second difference block: more than one split
        if (!inside) lo = i;
        inside = true;
        hi = i;
      } else if (inside) {
        closed = true;
      }
    }
    return inside;
  };
  std::size_t lo1, hi1, lo2, hi2;
  if (!segment(p1, in2, lo1, hi1) || !segment(p2, in1, lo2, hi2)) return false;
  // both detours must run between the same split and merge nodes
  if (dag.arcs[p1[lo1]].first != dag.arcs[p2[lo2]].first) return false;
  if (dag.arcs[p1[hi1]].second != dag.arcs[p2[hi2]].second) return false;
  const auto i1 = inner_nodes(dag, p1, lo1, hi1);
  const auto i2 = inner_nodes(dag, p2, lo2, hi2);
  for (auto v : i1)
    for (auto w : i2)
      if (v == w) return false;
  return true;
}

std::optional<std::size_t> is_decomposable(const DagDesc& dag) {
  for (std::size_t blocked = 0; blocked < dag.node_count; ++blocked) {
    if (blocked == dag.source || blocked == dag.sink) continue;
    std::vector<bool> reach(dag.node_count, false);
    reach[dag.source] = true;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t a = 0; a < dag.arcs.size(); ++a) {
        if (!dag.arc_live[a]) continue;
        const auto [u, v] = dag.arcs[a];
        if (u == blocked || v == blocked) continue;
        if (reach[u] && !reach[v]) {
          reach[v] = true;
          changed = true;
        }
      }
    }
    if (!reach[dag.sink]) {
      // only meaningful when s reaches t at all
      std::vector<bool> plain(dag.node_count, false);
      plain[dag.source] = true;
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t a = 0; a < dag.arcs.size(); ++a) {
          if (!dag.arc_live[a]) continue;
          const auto [u, v] = dag.arcs[a];
          if (plain[u] && !plain[v]) {
            plain[v] = true;
            changed = true;
          }
        }
      }
      if (plain[dag.sink]) return blocked;
    }
  }
  return std::nullopt;
}

SkeletonGraph flow_skeleton(const DagDesc& dag, const Budgets& budgets) {
  const auto paths = st_paths(dag, budgets);
  SkeletonGraph g = SkeletonGraph::empty(paths.size());
  g.node_labels.reserve(paths.size());
  for (const auto& p : paths) {
    std::ostringstream os;
    os << dag.source;
    for (auto a : p) os << ">" << dag.arcs[a].second;
    g.node_labels.push_back(os.str());
  }
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j)
      if (path_adjacent(dag, paths[i], paths[j])) g.add_edge(i, j);
  return g;
}

RatVec path_coords(const DagDesc& dag, const ArcSet& path) {
  RatVec x(dag.arcs.size(), Rat(0));
  for (auto a : path) x[a] = 1;
  return x;
}

}  // namespace simplext
