#ifndef SIMPLEXT_MATCHINGS_HPP
#define SIMPLEXT_MATCHINGS_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "simplext/polytope.hpp"
#include "simplext/types.hpp"

namespace simplext {

using Edge = std::pair<std::size_t, std::size_t>;  // stored (min, max)

// Perfect matching of K_{2n} on nodes 0..2n-1.
struct Matching {
  std::size_t node_count = 0;
  std::vector<std::size_t> partner;

  static Matching from_edges(std::size_t nodes, const std::vector<Edge>& edges);
  std::vector<Edge> edges() const;  // sorted
  bool has_edge(std::size_t u, std::size_t v) const { return partner[u] == v; }
  bool operator==(const Matching& o) const { return partner == o.partner; }
  bool operator<(const Matching& o) const { return partner < o.partner; }
};

// All perfect matchings of K_nodes, lexicographically sorted by edge list.
std::vector<Matching> perfect_matchings(std::size_t nodes);

// M1 delta M2 as node-disjoint alternating cycles.  Each cycle starts at
// its smallest node and first follows the M1-edge, so cycle edge
// {v_0, v_1} always belongs to M1.
struct AlternatingDecomposition {
  std::vector<std::vector<std::size_t>> cycles;  // even length >= 4 each
  std::vector<Edge> common;                      // M1 intersect M2
};

AlternatingDecomposition sym_diff_cycles(const Matching& m1, const Matching& m2);

// Chvatal: adjacent iff the symmetric difference is one alternating cycle.
bool matching_adjacent(const Matching& m1, const Matching& m2);

// Third matching adjacent to an adjacent pair, matching the cycle nodes
// among themselves while avoiding every cycle edge.  The 4-cycle case
// uses the unique chord matching.
Matching adjacent_cycle_matching(const Matching& m1, const Matching& m2);

// Connected components of the union multigraph M3 u Mp; a doubled edge
// forms its own 2-node component.
struct Components {
  std::size_t count = 0;
  std::vector<NodeSet> node_sets;
  std::vector<std::size_t> component_of;  // node -> component index
};

Components components(const Matching& m3, const Matching& mp);

struct GoodnessReport {
  bool adjacent_to_base_pair = false;    // (A)
  bool components_touch_cycle = false;   // (B)
  bool cycle_edges_in_one_component = false;  // (C)
  bool component_sum_bound = false;      // (D)
  bool per_side_bound = false;           // (E)
  std::size_t component_count = 0;
  std::string witness;  // first failed property, human-readable

  bool good() const {
    return adjacent_to_base_pair && components_touch_cycle &&
           cycle_edges_in_one_component && component_sum_bound && per_side_bound;
  }
};

GoodnessReport goodness(const Matching& mp, const Matching& m1, const Matching& m2,
                        const Matching& m3);

// Restriction to the nodes not matched identically by all three matchings.
struct StrippedTriple {
  Matching m1, m2, m3;
  std::vector<std::size_t> original_node;  // restricted id -> original id
  std::vector<Edge> removed;               // common edges, original labels
  bool degenerate = false;                 // all nodes stripped
};

StrippedTriple strip_common(const Matching& m1, const Matching& m2, const Matching& m3);

// A good matching for a triple with empty common intersection where M3 is
// not adjacent to both base matchings.  Splices every M3-cycle that
// avoids the base cycle into the constructed neighbor.
Matching good_matching_exists(const Matching& m1, const Matching& m2, const Matching& m3);

struct ExchangeStep {
  std::size_t c_before = 0;
  std::size_t component = 0;  // the component holding the base-cycle edges
  Edge connector;             // e, joins two components
  std::size_t side = 0;       // j with e in Mj \ Mk
  int case_tag = 0;           // 1 or 2
  Edge removed_f1, removed_f2;
  std::vector<Edge> added;
};

struct CommonNeighborResult {
  bool pairwise_adjacent = false;
  Matching neighbor;  // valid iff !pairwise_adjacent
  std::vector<ExchangeStep> trace;
};

// For M1 adjacent to M2: either the triple is pairwise adjacent or a
// matching adjacent to all three is constructed by descending on the
// number of M3-M'-components.
CommonNeighborResult three_common_neighbor(const Matching& m1, const Matching& m2,
                                           const Matching& m3);

SkeletonGraph perfect_matching_skeleton(std::size_t nodes, const Budgets& budgets = {});

// Characteristic vector over the lexicographic edge list of K_nodes.
RatVec matching_coords(const Matching& m);

std::string matching_label(const Matching& m);

}  // namespace simplext

#endif
