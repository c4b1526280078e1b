#include "simplext/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "simplext/errors.hpp"
#include "simplext/linalg.hpp"
#include "simplext/lp.hpp"

namespace simplext {

Budgets Budgets::with_enumeration_limit(std::size_t n) {
  Budgets b;
  b.max_enum_subsets = n;
  b.max_closed_sets = n;
  b.max_paths = n;
  return b;
}

HPolytope HPolytope::box(std::size_t dim, const Rat& lo, const Rat& hi) {
  HPolytope h;
  h.ambient_dim = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    RatVec up(dim, Rat(0)), down(dim, Rat(0));
    up[i] = 1;
    down[i] = -1;
    h.inequalities.push_back({up, hi});
    h.inequalities.push_back({down, -lo});
  }
  return h;
}

HPolytope HPolytope::with_extra_inequality(const RatVec& normal, const Rat& rhs) const {
  HPolytope h = *this;
  h.inequalities.push_back({normal, rhs});
  return h;
}

VPolytope VPolytope::from_vertices(std::size_t dim, RatMat points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return VPolytope{dim, std::move(points)};
}

VPolytope VPolytope::from_points(std::size_t dim, RatMat points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  // p is a vertex iff p is not a convex combination of the other points
  RatMat keep;
  for (std::size_t p = 0; p < points.size(); ++p) {
    const std::size_t others = points.size() - 1;
    if (others == 0) {
      keep.push_back(points[p]);
      continue;
    }
    RatMat a(dim + 1, RatVec(others, Rat(0)));
    RatVec b(dim + 1);
    std::size_t col = 0;
    for (std::size_t q = 0; q < points.size(); ++q) {
      if (q == p) continue;
      for (std::size_t i = 0; i < dim; ++i) a[i][col] = points[q][i];
      a[dim][col] = 1;
      ++col;
    }
    for (std::size_t i = 0; i < dim; ++i) b[i] = points[p][i];
    b[dim] = 1;
    if (!lp_feasible(a, b)) keep.push_back(points[p]);
  }
  return VPolytope{dim, std::move(keep)};
}

std::size_t VPolytope::find(const RatVec& point) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), point);
  if (it != vertices.end() && *it == point) return static_cast<std::size_t>(it - vertices.begin());
  return npos;
}

NodeSet IncidenceStructure::facets_of_vertex(std::size_t v) const {
  NodeSet s(facet_count);
  for (std::size_t f = 0; f < facet_count; ++f)
    if (incident[f].test(v)) s.set(f);
  return s;
}

SkeletonGraph SkeletonGraph::empty(std::size_t n) {
  SkeletonGraph g;
  g.node_count = n;
  g.adjacency.assign(n, NodeSet(n));
  return g;
}

void SkeletonGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  adjacency[u].set(v);
  adjacency[v].set(u);
}

bool SkeletonGraph::has_edge(std::size_t u, std::size_t v) const {
  return u != v && adjacency[u].test(v);
}

std::size_t SkeletonGraph::max_degree() const {
  std::size_t d = 0;
  for (const auto& row : adjacency) d = std::max(d, row.count());
  return d;
}

std::size_t SkeletonGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency) twice += row.count();
  return twice / 2;
}

bool SkeletonGraph::is_connected() const {
  if (node_count == 0) return true;
  const auto dist = distances_from(0);
  for (auto d : dist)
    if (d < 0) return false;
  return true;
}

bool SkeletonGraph::is_complete() const {
  for (std::size_t v = 0; v < node_count; ++v)
    if (adjacency[v].count() != node_count - 1) return false;
  return true;
}

std::vector<int> SkeletonGraph::distances_from(std::size_t source) const {
  std::vector<int> dist(node_count, -1);
  std::vector<std::size_t> frontier{source};
  dist[source] = 0;
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto u : frontier) {
      const auto& row = adjacency[u];
      for (auto v = row.find_first(); v != NodeSet::npos; v = row.find_next(v)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

std::string SkeletonGraph::canonical_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(node_count);
  for (std::size_t v = 0; v < node_count; ++v)
    for (auto w = adjacency[v].find_first(); w != NodeSet::npos; w = adjacency[v].find_next(w))
      mix(v * node_count + w);
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

int affine_dimension(const VPolytope& v) {
  if (v.vertices.empty()) throw Infeasible("affine_dimension of an empty polytope");
  return affine_rank(v.vertices);
}

bool is_simple(const IncidenceStructure& inc) {
  for (std::size_t v = 0; v < inc.vertex_count; ++v) {
    std::size_t count = 0;
    for (std::size_t f = 0; f < inc.facet_count; ++f)
      if (inc.incident[f].test(v)) ++count;
    if (count != static_cast<std::size_t>(inc.dim)) return false;
  }
  return true;
}

bool v_adjacency(const VPolytope& v, std::size_t i, std::size_t j) {
  const std::size_t n = v.ambient_dim, cnt = v.size();
  if (i == j || i >= cnt || j >= cnt) throw OutOfRange("v_adjacency: bad vertex indices");
  // minimize lambda_i + lambda_j over representations of the midpoint;
  // the segment is an edge iff the pair cannot shed weight
  RatMat a(n + 1, RatVec(cnt, Rat(0)));
  RatVec b(n + 1);
  for (std::size_t k = 0; k < cnt; ++k) {
    for (std::size_t r = 0; r < n; ++r) a[r][k] = v.vertices[k][r];
    a[n][k] = 1;
  }
  for (std::size_t r = 0; r < n; ++r) b[r] = (v.vertices[i][r] + v.vertices[j][r]) / 2;
  b[n] = 1;
  RatVec cost(cnt, Rat(0));
  cost[i] = 1;
  cost[j] = 1;
  const auto res = lp_solve(a, b, cost);
  if (res.status != LpStatus::Optimal)
    throw InternalInvariantViolation("v_adjacency LP did not solve");
  return res.objective == 1;
}

SkeletonGraph skeleton(const VPolytope& v, const Budgets& budgets) {
  if (v.size() > budgets.max_vertices) throw TooLarge("skeleton: vertex budget exceeded");
  SkeletonGraph g = SkeletonGraph::empty(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v_adjacency(v, i, j)) g.add_edge(i, j);
  return g;
}

namespace {

struct NormalizedH {
  std::size_t n = 0;
  RatMat ineq_lhs;
  RatVec ineq_rhs;
  RatMat eq_rows;  // rref'd [E | e] rows, consistent
  std::size_t eq_rank = 0;
};

NormalizedH normalize(const HPolytope& h) {
  NormalizedH out;
  out.n = h.ambient_dim;
  for (const auto& c : h.inequalities) {
    if (c.normal.size() != h.ambient_dim) throw InputError("inequality dimension mismatch");
    if (is_zero(c.normal)) {
      if (c.rhs < 0) throw Infeasible("inequality 0 <= negative");
      continue;
    }
    out.ineq_lhs.push_back(c.normal);
    out.ineq_rhs.push_back(c.rhs);
  }
  RatMat aug;
  for (const auto& c : h.equations) {
    if (c.normal.size() != h.ambient_dim) throw InputError("equation dimension mismatch");
    RatVec row = c.normal;
    row.push_back(c.rhs);
    aug.push_back(std::move(row));
  }
  const auto pivots = rref(aug);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i] == h.ambient_dim) throw Infeasible("inconsistent equations");
  aug.resize(pivots.size());
  out.eq_rows = std::move(aug);
  out.eq_rank = pivots.size();
  return out;
}

bool satisfies(const NormalizedH& h, const RatVec& x) {
  for (std::size_t i = 0; i < h.ineq_lhs.size(); ++i)
    if (dot(h.ineq_lhs[i], x) > h.ineq_rhs[i]) return false;
  for (const auto& row : h.eq_rows) {
    Rat s = 0;
    for (std::size_t j = 0; j < h.n; ++j) s += row[j] * x[j];
    if (s != row[h.n]) return false;
  }
  return true;
}

void check_feasible_bounded(const NormalizedH& h) {
  RatMat eq_lhs;
  RatVec eq_rhs;
  for (const auto& row : h.eq_rows) {
    eq_lhs.emplace_back(row.begin(), row.begin() + h.n);
    eq_rhs.push_back(row[h.n]);
  }
  if (!lp_feasible_point(h.ineq_lhs, h.ineq_rhs, eq_lhs, eq_rhs, h.n))
    throw Infeasible("H-polytope is empty");
  // recession cone: A x <= 0, E x = 0; nonzero iff some +-coordinate
  // can be pushed to 1
  const RatVec zero_rhs(h.ineq_lhs.size(), Rat(0));
  RatVec eq0(eq_rhs.size(), Rat(0));
  for (std::size_t i = 0; i < h.n; ++i) {
    for (const Rat sign : {Rat(1), Rat(-1)}) {
      RatMat eqs = eq_lhs;
      RatVec rhs = eq0;
      RatVec pin(h.n, Rat(0));
      pin[i] = sign;
      eqs.push_back(pin);
      rhs.push_back(Rat(1));
      if (lp_feasible_point(h.ineq_lhs, zero_rhs, eqs, rhs, h.n))
        throw Unbounded("H-polytope has a recession direction");
    }
  }
}

// Deterministic supporting inequality through a facet's tight vertex set.
LinearConstraint facet_from_tight_set(const RatMat& vertices, const std::vector<std::size_t>& tight) {
  RatMat diffs;
  for (std::size_t k = 1; k < tight.size(); ++k)
    diffs.push_back(sub(vertices[tight[k]], vertices[tight[0]]));
  if (diffs.empty()) diffs.push_back(RatVec(vertices[0].size(), Rat(0)));
  const RatMat candidates = nullspace(std::move(diffs));
  for (const auto& normal : candidates) {
    const Rat beta = dot(normal, vertices[tight[0]]);
    bool below = false, above = false;
    for (const auto& v : vertices) {
      const Rat s = dot(normal, v);
      if (s < beta) below = true;
      if (s > beta) above = true;
    }
    if (below && above) continue;  // not supporting: skip
    if (!below && !above) continue;  // constant on P: affine hull direction
    LinearConstraint c{normal, beta};
    if (above) {
      c.normal = scale(Rat(-1), c.normal);
      c.rhs = -beta;
    }
    make_primitive(c.normal, c.rhs);
    return c;
  }
  throw InternalInvariantViolation("no supporting normal for claimed facet");
}

std::vector<LinearConstraint> hull_equations(const RatMat& vertices) {
  RatMat diffs;
  for (std::size_t k = 1; k < vertices.size(); ++k)
    diffs.push_back(sub(vertices[k], vertices[0]));
  std::vector<LinearConstraint> eqs;
  if (diffs.empty()) diffs.push_back(RatVec(vertices[0].size(), Rat(0)));
  for (auto& normal : nullspace(std::move(diffs))) {
    Rat rhs = dot(normal, vertices[0]);
    make_primitive(normal, rhs);
    for (auto& x : normal)
      if (x != 0) {
        if (x < 0) {
          normal = scale(Rat(-1), normal);
          rhs = -rhs;
        }
        break;
      }
    eqs.push_back({std::move(normal), rhs});
  }
  std::sort(eqs.begin(), eqs.end(), [](const LinearConstraint& a, const LinearConstraint& b) {
    return std::tie(a.normal, a.rhs) < std::tie(b.normal, b.rhs);
  });
  return eqs;
}

bool subsets_within_budget(std::size_t m, std::size_t k, std::size_t budget) {
  // C(m, k) <= budget without overflow
  if (k > m) return true;
  double c = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    c *= static_cast<double>(m - i) / static_cast<double>(i + 1);
    if (c > static_cast<double>(budget) * 1.01) return false;
  }
  return true;
}

}  // namespace

IncidenceStructure incidence_structure(const VPolytope& v,
                                       const std::vector<LinearConstraint>& facets,
                                       int dim) {
  IncidenceStructure inc;
  inc.facet_count = facets.size();
  inc.vertex_count = v.size();
  inc.dim = dim;
  inc.incident.assign(facets.size(), NodeSet(v.size()));
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (dot(facets[f].normal, v.vertices[j]) == facets[f].rhs) inc.incident[f].set(j);
  return inc;
}

VertexEnumeration enumerate_vertices(const HPolytope& h, const Budgets& budgets) {
  const NormalizedH nh = normalize(h);
  check_feasible_bounded(nh);
  const std::size_t n = nh.n, m = nh.ineq_lhs.size();
  const std::size_t need = n - nh.eq_rank;
  if (!subsets_within_budget(m, need, budgets.max_enum_subsets))
    throw TooLarge("enumerate_vertices: subset budget exceeded");

  RatMat base(nh.eq_rank, RatVec(n));
  RatVec base_rhs(nh.eq_rank);
  for (std::size_t i = 0; i < nh.eq_rank; ++i) {
    for (std::size_t j = 0; j < n; ++j) base[i][j] = nh.eq_rows[i][j];
    base_rhs[i] = nh.eq_rows[i][n];
  }

  std::set<RatVec> found;
  if (need == 0) {
    if (auto x = solve_unique(base, base_rhs); x && satisfies(nh, *x)) found.insert(*x);
  } else if (need <= m) {
    std::vector<std::size_t> pick(need);
    for (std::size_t i = 0; i < need; ++i) pick[i] = i;
    for (;;) {
      RatMat sys = base;
      RatVec rhs = base_rhs;
      for (auto idx : pick) {
        sys.push_back(nh.ineq_lhs[idx]);
        rhs.push_back(nh.ineq_rhs[idx]);
      }
      if (auto x = solve_unique(std::move(sys), std::move(rhs)); x && satisfies(nh, *x)) {
        found.insert(*x);
        if (found.size() > budgets.max_vertices)
          throw TooLarge("enumerate_vertices: vertex budget exceeded");
      }
      // next k-combination of [0, m)
      std::size_t i = need;
      while (i > 0 && pick[i - 1] == m - need + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < need; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  if (found.empty()) throw Infeasible("bounded system has no vertex");

  VertexEnumeration out;
  out.vertices = VPolytope::from_vertices(n, RatMat(found.begin(), found.end()));
  const int dim = affine_dimension(out.vertices);
  out.affine_hull = hull_equations(out.vertices.vertices);

  // Facets: tight vertex sets of input inequalities that span dimension
  // dim-1.  Duplicate and redundant inequalities collapse here.
  std::map<std::vector<std::size_t>, LinearConstraint> facet_by_tight;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> tight;
    RatMat tight_pts;
    for (std::size_t j = 0; j < out.vertices.size(); ++j) {
      if (dot(nh.ineq_lhs[i], out.vertices.vertices[j]) == nh.ineq_rhs[i]) {
        tight.push_back(j);
        tight_pts.push_back(out.vertices.vertices[j]);
      }
    }
    if (tight.empty() || affine_rank(tight_pts) != dim - 1) continue;
    if (!facet_by_tight.count(tight))
      facet_by_tight.emplace(tight, facet_from_tight_set(out.vertices.vertices, tight));
  }
  for (auto& [tight, c] : facet_by_tight) out.facets.push_back(c);
  std::sort(out.facets.begin(), out.facets.end(),
            [](const LinearConstraint& a, const LinearConstraint& b) {
              return std::tie(a.normal, a.rhs) < std::tie(b.normal, b.rhs);
            });
  out.incidence = incidence_structure(out.vertices, out.facets, dim);
  return out;
}

HDescription h_description(const VPolytope& v, const Budgets& budgets) {
  if (v.vertices.empty()) throw Infeasible("h_description of an empty polytope");
  HDescription out;
  out.dim = affine_dimension(v);
  out.affine_hull = hull_equations(v.vertices);
  const std::size_t cnt = v.size();
  const std::size_t d = static_cast<std::size_t>(out.dim);
  if (out.dim <= 0) return out;  // a point: affine hull only
  if (!subsets_within_budget(cnt, d, budgets.max_enum_subsets))
    throw TooLarge("h_description: subset budget exceeded");

  std::set<std::vector<std::size_t>> seen;
  std::map<std::pair<RatVec, Rat>, LinearConstraint> facets;
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  for (;;) {
    RatMat pts;
    for (auto idx : pick) pts.push_back(v.vertices[idx]);
    if (affine_rank(pts) == out.dim - 1) {
      RatMat diffs;
      for (std::size_t k = 1; k < pick.size(); ++k)
        diffs.push_back(sub(v.vertices[pick[k]], v.vertices[pick[0]]));
      for (const auto& normal : nullspace(std::move(diffs))) {
        const Rat beta = dot(normal, v.vertices[pick[0]]);
        bool below = false, above = false;
        for (const auto& p : v.vertices) {
          const Rat s = dot(normal, p);
          if (s < beta) below = true;
          if (s > beta) above = true;
          if (below && above) break;
        }
        if (below == above) continue;  // cutting or constant: not a facet
        std::vector<std::size_t> tight;
        for (std::size_t j = 0; j < cnt; ++j)
          if (dot(normal, v.vertices[j]) == beta) tight.push_back(j);
        RatMat tight_pts;
        for (auto t : tight) tight_pts.push_back(v.vertices[t]);
        if (affine_rank(tight_pts) != out.dim - 1) continue;
        if (seen.insert(tight).second) {
          auto c = facet_from_tight_set(v.vertices, tight);
          facets.emplace(std::make_pair(c.normal, c.rhs), c);
        }
      }
    }
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == cnt - d + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  for (auto& [key, c] : facets) out.facets.push_back(c);
  return out;
}

}  // namespace simplext
