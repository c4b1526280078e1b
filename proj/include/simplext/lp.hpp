#ifndef SIMPLEXT_LP_HPP
#define SIMPLEXT_LP_HPP

#include <optional>
#include <vector>

#include "simplext/types.hpp"

namespace simplext {

// Small exact-rational simplex, sized for desk-scale feasibility and
// adjacency subproblems.  Bland's rule throughout, so it never cycles.

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  Rat objective;   // valid when Optimal
  RatVec solution; // valid when Optimal
};

// minimize c.x  subject to  A x = b,  x >= 0.
LpResult lp_solve(const RatMat& a, const RatVec& b, const RatVec& c);

// Feasibility of  A x = b, x >= 0.
bool lp_feasible(const RatMat& a, const RatVec& b);

// Feasibility of a general system  A x <= b, E x = e  with free x
// (split variables plus slacks internally).  Returns a witness point.
std::optional<RatVec> lp_feasible_point(const RatMat& ineq_lhs, const RatVec& ineq_rhs,
                                        const RatMat& eq_lhs, const RatVec& eq_rhs,
                                        std::size_t num_vars);

}  // namespace simplext

#endif
