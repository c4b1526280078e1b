#ifndef SIMPLEXT_POLYTOPE_HPP
#define SIMPLEXT_POLYTOPE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "simplext/types.hpp"

namespace simplext {

struct Budgets {
  // Maximum number of constraint subsets tried during vertex enumeration.
  std::size_t max_enum_subsets = 5'000'000;
  // Maximum number of vertices a single polytope may have.
  std::size_t max_vertices = 100'000;
  // Maximum number of faces materialized in a face lattice.
  std::size_t max_lattice_faces = 200'000;
  // Maximum node count for all-pairs closure sweeps.
  std::size_t max_sweep_nodes = 2'000;
  // Maximum number of closed sets enumerated by the exact cover search.
  std::size_t max_closed_sets = 200'000;
  // Maximum number of s-t paths enumerated for a DAG.
  std::size_t max_paths = 100'000;

  // Scales the enumeration-style limits by the given count, as the
  // SIMPLEXT_BUDGET override does.
  static Budgets with_enumeration_limit(std::size_t n);
};

struct LinearConstraint {
  RatVec normal;
  Rat rhs;
};

// A x <= b together with E x = e.  Inequalities with zero normal and
// nonnegative rhs are dropped on normalization; a zero normal with
// negative rhs marks the polytope infeasible.
struct HPolytope {
  std::size_t ambient_dim = 0;
  std::vector<LinearConstraint> inequalities;
  std::vector<LinearConstraint> equations;

  static HPolytope box(std::size_t dim, const Rat& lo, const Rat& hi);
  HPolytope with_extra_inequality(const RatVec& normal, const Rat& rhs) const;
};

// Vertex list, lexicographically sorted and deduplicated.
struct VPolytope {
  std::size_t ambient_dim = 0;
  RatMat vertices;

  // Canonicalizes points that are known to be vertices (sort + dedup only).
  static VPolytope from_vertices(std::size_t dim, RatMat points);
  // Canonicalizes arbitrary points: drops every point that is a convex
  // combination of the others (exact LP filter), then sorts.
  static VPolytope from_points(std::size_t dim, RatMat points);

  std::size_t size() const { return vertices.size(); }
  // Index of an exactly matching vertex, or npos.
  std::size_t find(const RatVec& point) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// Facet-vertex incidence.  Row i belongs to facet i of the canonical facet
// list, column j to vertex j of the canonical vertex list.
struct IncidenceStructure {
  std::size_t facet_count = 0;
  std::size_t vertex_count = 0;
  int dim = -1;
  std::vector<NodeSet> incident;  // facet_count rows of vertex_count bits

  NodeSet facets_of_vertex(std::size_t v) const;  // as a facet-index set
};

struct SkeletonGraph {
  std::size_t node_count = 0;
  std::vector<NodeSet> adjacency;          // symmetric, loop-free
  std::vector<std::string> node_labels;    // optional, may be empty

  static SkeletonGraph empty(std::size_t n);
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const { return adjacency[v].count(); }
  std::size_t max_degree() const;
  std::size_t edge_count() const;
  bool is_connected() const;
  bool is_complete() const;
  // BFS distances from source; -1 where unreachable.
  std::vector<int> distances_from(std::size_t source) const;
  std::string canonical_hash() const;
};

// Output of enumerate_vertices: the vertex set, the facet-vertex incidence
// and the canonical facet description recovered from the input system
// (redundant or duplicate input inequalities are not facets).
struct VertexEnumeration {
  VPolytope vertices;
  IncidenceStructure incidence;
  std::vector<LinearConstraint> facets;    // row i matches incidence row i
  std::vector<LinearConstraint> affine_hull;
};

// Brute-force exact vertex enumeration of a bounded nonempty H-polytope.
// Throws Infeasible, Unbounded or TooLarge.
VertexEnumeration enumerate_vertices(const HPolytope& h, const Budgets& budgets = {});

int affine_dimension(const VPolytope& v);

bool is_simple(const IncidenceStructure& inc);

// Exact edge test on a V-polytope: the midpoint of [v_i, v_j] admits a
// convex representation placing total weight < 1 on the pair iff the
// segment is not an edge.
bool v_adjacency(const VPolytope& v, std::size_t i, std::size_t j);

SkeletonGraph skeleton(const VPolytope& v, const Budgets& budgets = {});

// Facet + affine hull description of conv(vertices), canonicalized:
// primitive integer data, facets sorted lexicographically.
struct HDescription {
  std::vector<LinearConstraint> facets;
  std::vector<LinearConstraint> affine_hull;
  int dim = -1;
};
HDescription h_description(const VPolytope& v, const Budgets& budgets = {});

// Incidence of a vertex list against a given facet list.
IncidenceStructure incidence_structure(const VPolytope& v,
                                       const std::vector<LinearConstraint>& facets,
                                       int dim);

}  // namespace simplext

#endif
