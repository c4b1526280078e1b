// Shared fixtures and independent oracles for the test suites.  The oracles
// here deliberately avoid the library code paths they are used to check.
#ifndef SIMPLEXT_TESTS_SUPPORT_HPP
#define SIMPLEXT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "simplext/polytope.hpp"

namespace test_support {

using namespace simplext;

inline VPolytope square_v() {
  return VPolytope::from_vertices(
      2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}});
}

inline VPolytope triangle_v() {
  return VPolytope::from_vertices(2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
}

inline VPolytope segment_v() {
  return VPolytope::from_vertices(1, {{Rat(0)}, {Rat(1)}});
}

// 0/1-cube sliced by sum(x) = k.
inline HPolytope hypersimplex_h(std::size_t n, std::size_t k) {
  HPolytope h = HPolytope::box(n, Rat(0), Rat(1));
  h.equations.push_back({RatVec(n, Rat(1)), Rat(k)});
  return h;
}

// The seven-column example polytope from the test corpus.
inline VPolytope example9_q() {
  return VPolytope::from_vertices(3, {{Rat(1), Rat(1), Rat(0)},
                                      {Rat(5), Rat(0), Rat(-4)},
                                      {Rat(1), Rat(-1), Rat(0)},
                                      {Rat(0), Rat(0), Rat(1)},
                                      {Rat(-1), Rat(1), Rat(0)},
                                      {Rat(-5), Rat(0), Rat(-4)},
                                      {Rat(-1), Rat(-1), Rat(0)}});
}

// Independent facet oracle for full-dimensional polytopes in R^3: brute-force
// hyperplane search over vertex triples with a cross-product normal.
inline std::vector<LinearConstraint> brute_force_facets(const VPolytope& v) {
  std::set<std::pair<RatVec, Rat>> seen;
  std::vector<LinearConstraint> out;
  const auto& pts = v.vertices;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c) {
        const RatVec u = sub(pts[b], pts[a]), w = sub(pts[c], pts[a]);
        RatVec nrm = {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2],
                      u[0] * w[1] - u[1] * w[0]};
        if (is_zero(nrm)) continue;
        Rat beta = dot(nrm, pts[a]);
        bool lo = false, hi = false;
        for (const auto& p : pts) {
          const Rat s = dot(nrm, p);
          if (s < beta) lo = true;
          if (s > beta) hi = true;
        }
        if (lo && hi) continue;
        if (hi) {
          nrm = scale(Rat(-1), nrm);
          beta = -beta;
        }
        make_primitive(nrm, beta);
        if (seen.insert({nrm, beta}).second) out.push_back({nrm, beta});
      }
  std::sort(out.begin(), out.end(), [](const LinearConstraint& x, const LinearConstraint& y) {
    return std::tie(x.normal, x.rhs) < std::tie(y.normal, y.rhs);
  });
  return out;
}

// Box [-2,2]^dim with `cuts` extra small-integer inequalities that keep the
// origin strictly feasible, so the result is bounded and nonempty.
inline HPolytope random_h_polytope(std::size_t dim, std::size_t cuts, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> rhs(1, 3);
  HPolytope h = HPolytope::box(dim, Rat(-2), Rat(2));
  for (std::size_t c = 0; c < cuts; ++c) {
    RatVec normal(dim);
    bool nonzero = false;
    for (auto& x : normal) {
      const int k = coeff(rng);
      x = Rat(k);
      nonzero |= (k != 0);
    }
    if (!nonzero) continue;
    h.inequalities.push_back({normal, Rat(rhs(rng))});
  }
  return h;
}

// Random integer points in a small box, filtered down to actual vertices.
inline VPolytope random_v_polytope(std::size_t dim, std::size_t points, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-2, 2);
  RatMat pts;
  for (std::size_t p = 0; p < points; ++p) {
    RatVec v(dim);
    for (auto& x : v) x = Rat(coord(rng));
    pts.push_back(std::move(v));
  }
  return VPolytope::from_points(dim, std::move(pts));
}

}  // namespace test_support

#endif
