#include "simplext/face_lattice.hpp"

#include <algorithm>
#include <set>

#include "simplext/errors.hpp"
#include "simplext/linalg.hpp"

namespace simplext {

std::size_t FaceLattice::id_of(const NodeSet& verts) const {
  const auto it = index_of.find(verts);
  return it == index_of.end() ? npos : it->second;
}

bool FaceLattice::contains(std::size_t inner, std::size_t outer) const {
  return faces[inner].vertices.is_subset_of(faces[outer].vertices);
}

std::vector<std::size_t> FaceLattice::faces_of_dim(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].dim == d) out.push_back(i);
  return out;
}

FaceLattice face_lattice(const VPolytope& v, const IncidenceStructure& inc,
                         const Budgets& budgets) {
  const std::size_t cnt = v.size();
  FaceLattice lat;
  lat.dim = inc.dim;

  NodeSet full(cnt);
  full.set();
  std::set<NodeSet> known{full, NodeSet(cnt)};
  std::vector<NodeSet> frontier{full};
  while (!frontier.empty()) {
    std::vector<NodeSet> next;
    for (const auto& face : frontier) {
      for (std::size_t f = 0; f < inc.facet_count; ++f) {
        NodeSet cut = face & inc.incident[f];
        if (known.insert(cut).second) {
          if (known.size() > budgets.max_lattice_faces)
            throw TooLarge("face_lattice: face budget exceeded");
          next.push_back(std::move(cut));
        }
      }
    }
    frontier = std::move(next);
  }

  for (const auto& verts : known) {
    Face face;
    face.vertices = verts;
    face.facets = NodeSet(inc.facet_count);
    for (std::size_t f = 0; f < inc.facet_count; ++f)
      if (verts.is_subset_of(inc.incident[f])) face.facets.set(f);
    if (verts.none()) {
      face.dim = -1;
    } else {
      RatMat pts;
      for (auto i = verts.find_first(); i != NodeSet::npos; i = verts.find_next(i))
        pts.push_back(v.vertices[i]);
      face.dim = affine_rank(pts);
    }
    lat.faces.push_back(std::move(face));
  }
  std::sort(lat.faces.begin(), lat.faces.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.vertices) < std::tie(b.dim, b.vertices);
  });
  for (std::size_t i = 0; i < lat.faces.size(); ++i) lat.index_of[lat.faces[i].vertices] = i;
  return lat;
}

}  // namespace simplext
