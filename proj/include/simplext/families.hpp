#ifndef SIMPLEXT_FAMILIES_HPP
#define SIMPLEXT_FAMILIES_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "simplext/matchings.hpp"
#include "simplext/polytope.hpp"
#include "simplext/types.hpp"

namespace simplext {

// ---- hypersimplex: 0/1-vectors with exactly k ones -------------------

// All C(n,k) characteristic vectors in lexicographic order (bit i is
// coordinate i).
std::vector<NodeSet> hypersimplex_vertices(std::size_t n, std::size_t k,
                                           const Budgets& budgets = {});

// Adjacent iff the vectors differ in exactly two coordinates.
bool hypersimplex_adjacent(const NodeSet& u, const NodeSet& w);

SkeletonGraph hypersimplex_skeleton(std::size_t n, std::size_t k,
                                    const Budgets& budgets = {});

RatVec bitvector_coords(const NodeSet& v);

// ---- spanning trees of K_n -------------------------------------------

using EdgeSet = std::vector<Edge>;  // sorted (min,max) pairs

// All n^(n-2) spanning trees of K_n, canonical edge-set order.
std::vector<EdgeSet> spanning_trees(std::size_t n);

// Adjacent iff the symmetric difference has exactly two edges.
bool tree_adjacent(const EdgeSet& t1, const EdgeSet& t2);

SkeletonGraph spanning_tree_skeleton(std::size_t n);

// Exact maximum skeleton degree via cut counting: removing edge e splits
// the tree into parts of sizes p and n-p, giving p(n-p)-1 exchanges.
std::size_t tree_skeleton_max_degree(std::size_t n);

// Path s-w_1-...-w_k-t plus a star of t over the remaining nodes.
EdgeSet build_tw(std::size_t n, std::size_t s, std::size_t t,
                 const std::vector<std::size_t>& w);

// Edges of `edges` with both endpoints in u (E[U]) or exactly one (cut).
EdgeSet edges_within(const EdgeSet& edges, const NodeSet& u);
EdgeSet edges_cut(const EdgeSet& edges, const NodeSet& u);

enum class FacetStatus { Tight, Slack, Violated };

// Compares |T intersect E[U]| with |U| - 1 for the subtour inequality.
FacetStatus subtour_facet_check(const EdgeSet& tree, const NodeSet& u);

RatVec tree_coords(std::size_t n, const EdgeSet& tree);

// ---- s-t paths of a DAG ----------------------------------------------

using Arc = std::pair<std::size_t, std::size_t>;  // (tail, head), parallel arcs allowed
using ArcSet = std::vector<std::size_t>;          // arc indices in path order

struct DagDesc {
  std::size_t node_count = 0;
  std::vector<Arc> arcs;
  std::size_t source = 0;
  std::size_t sink = 0;
  std::vector<bool> arc_live;  // arc lies on at least one s-t path

  // Validates acyclicity and marks the arcs usable by s-t paths.
  static DagDesc make(std::size_t nodes, std::vector<Arc> arcs, std::size_t s, std::size_t t);
};

// All s-t paths in deterministic order (DFS over ascending arc indices).
std::vector<ArcSet> st_paths(const DagDesc& dag, const Budgets& budgets = {});

// Gallo-Sodini: adjacent iff the two paths split and merge exactly once,
// i.e. both difference segments are contiguous with disjoint inner nodes.
bool path_adjacent(const DagDesc& dag, const ArcSet& p1, const ArcSet& p2);

// An internal node traversed by every s-t path, if one exists.
std::optional<std::size_t> is_decomposable(const DagDesc& dag);

SkeletonGraph flow_skeleton(const DagDesc& dag, const Budgets& budgets = {});

// Characteristic vector over all arcs of the DAG.
RatVec path_coords(const DagDesc& dag, const ArcSet& path);

}  // namespace simplext

#endif
