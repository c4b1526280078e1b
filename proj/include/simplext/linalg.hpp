#ifndef SIMPLEXT_LINALG_HPP
#define SIMPLEXT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "simplext/types.hpp"

namespace simplext {

// Reduced row echelon form with lexicographic pivoting (leftmost usable
// column, topmost row).  Returns the pivot column of each pivot row in
// order; rank is the number of pivots.  Zero rows sink to the bottom.
std::vector<std::size_t> rref(RatMat& m);

std::size_t rank(RatMat m);

// Rank of {p_i - p_0}; -1 for an empty point set, 0 for a single point.
int affine_rank(const RatMat& points);

// Unique solution of  m x = rhs  if m has full column rank and the system
// is consistent; std::nullopt otherwise.
std::optional<RatVec> solve_unique(RatMat m, RatVec rhs);

// Basis of the nullspace {x : m x = 0}, deterministic for a given input.
RatMat nullspace(RatMat m);

}  // namespace simplext

#endif
