#ifndef SIMPLEXT_FACE_LATTICE_HPP
#define SIMPLEXT_FACE_LATTICE_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "simplext/polytope.hpp"
#include "simplext/types.hpp"

namespace simplext {

struct Face {
  NodeSet vertices;   // vertex-index set
  NodeSet facets;     // facets whose intersection defines the face
  int dim = -1;       // affine dimension of the spanned vertex set
};

// All faces of a polytope as intersections of facet vertex sets, closed
// under pairwise intersection, with the empty face and the polytope
// itself.  Faces are sorted by (dim, vertex set), so ids are stable.
struct FaceLattice {
  int dim = -1;
  std::vector<Face> faces;
  std::map<NodeSet, std::size_t> index_of;

  std::size_t size() const { return faces.size(); }
  std::size_t id_of(const NodeSet& verts) const;           // npos if absent
  bool contains(std::size_t inner, std::size_t outer) const;
  std::vector<std::size_t> faces_of_dim(int d) const;
  std::size_t empty_face() const { return 0; }
  std::size_t full_face() const { return faces.size() - 1; }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

FaceLattice face_lattice(const VPolytope& v, const IncidenceStructure& inc,
                         const Budgets& budgets = {});

}  // namespace simplext

#endif
