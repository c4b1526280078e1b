#ifndef SIMPLEXT_CLOSURE_HPP
#define SIMPLEXT_CLOSURE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "simplext/polytope.hpp"
#include "simplext/types.hpp"

namespace simplext {

// Common-neighbor operator: adds every outside node with two distinct
// neighbors inside the set.  The empty set maps to itself.
NodeSet cn_step(const SkeletonGraph& g, const NodeSet& w);

// Fixpoint of cn_step starting from w, with the full iterate trace.
struct ClosureCertificate {
  std::string graph_hash;
  std::vector<std::size_t> seed;
  std::vector<NodeSet> trace;  // seed first, fixpoint last, strictly growing
  NodeSet final;
  bool proper = false;    // final != V
  bool isolated = false;  // pairwise distance >= 3 within final
};

ClosureCertificate closure(const SkeletonGraph& g, const NodeSet& seed);
ClosureCertificate closure(const SkeletonGraph& g, const std::vector<std::size_t>& seed);

// Plain fixpoint without certificate bookkeeping.
NodeSet closure_set(const SkeletonGraph& g, NodeSet w);

// Pairwise graph distance >= 3 between all members.
bool is_isolated(const SkeletonGraph& g, const NodeSet& w);

struct PairSweepReport {
  std::size_t node_count = 0;
  bool distance_le2_only = false;
  std::size_t pairs_tested = 0;
  std::size_t full_closures = 0;
  // pairs whose closure stays proper
  std::vector<std::pair<std::size_t, std::size_t>> counterexamples;
  std::string justification;

  bool all_full() const { return counterexamples.empty(); }
};

// Closes every qualifying node pair and reports which stay proper.  With
// the distance filter only pairs at graph distance <= 2 are swept, which
// suffices to certify that all proper closed sets are isolated.
PairSweepReport pair_closure_sweep(const SkeletonGraph& g, bool distance_le2_only = false,
                                   const Budgets& budgets = {});

// All common-neighbor closed sets in lectic order (Ganter's NextClosure;
// the closed sets form an intersection-closed family).
std::vector<NodeSet> all_closed_sets(const SkeletonGraph& g, const Budgets& budgets = {});

enum class CoverMode { Exact, SingletonShortcut, DegreeBound };

struct CoverResult {
  CoverMode mode = CoverMode::Exact;
  std::size_t bound = 0;
  std::vector<NodeSet> cover;    // optimal cover, exact mode only
  std::size_t max_degree = 0;    // degree-bound mode
  PairSweepReport sweep;         // shortcut modes carry their sweep
};

// Lower bound on the number of proper closed sets needed to cover V:
// exact minimum (branch and bound over maximal proper closed sets),
// |V| via the all-pairs sweep shortcut, or max degree + 1 when all
// proper closed sets are isolated.
CoverResult cover_lower_bound(const SkeletonGraph& g, CoverMode mode,
                              const Budgets& budgets = {});

struct Random01Report {
  std::size_t dim = 0;
  std::size_t samples = 0;
  std::size_t vertices_per_sample = 0;
  std::size_t complete_count = 0;
  double completeness_fraction = 0.0;
  double sigma = 0.0;
  // whether vertex count stays below 2^(sigma * d); informational only
  bool within_sigma_regime = false;
};

// Samples vertex sets uniformly from {0,1}^d and reports how often the
// resulting skeleton is complete (in which case the cover bound equals
// the vertex count).  Purely empirical; no asymptotic claim.
Random01Report sample_random_01(std::size_t d, std::size_t count, std::size_t vertex_budget,
                                std::uint64_t seed, double sigma = 0.3);

}  // namespace simplext

#endif
