#pragma once

#include <string>
#include <vector>

#include "fgpd/finspace.hpp"

namespace fgpd {

/// An abstract simplicial complex given by its facets (maximal faces).
/// Vertices are named; facets are stored as sorted vertex-index sets with
/// no facet contained in another.
struct SimplicialComplex {
  std::vector<std::string> vertices;       // sorted lexicographically
  std::vector<std::vector<int>> facets;    // each sorted; mutually incomparable

  int vertex_count() const { return static_cast<int>(vertices.size()); }

  /// All faces of dimension d (d+1 vertices), sorted lexicographically.
  std::vector<std::vector<int>> faces_of_dim(int d) const;

  /// Every nonempty face, listed by ascending dimension then
  /// lexicographic order.
  std::vector<std::vector<int>> all_faces() const;

  bool connected() const;
};

/// Builds a complex from facet vertex lists.  Dedupes facets and drops
/// facets contained in others; throws BadComplex on empty facets.
SimplicialComplex make_complex(
    const std::vector<std::vector<std::string>>& facets);

/// Finite model of |K|: points are the nonempty faces, and sigma leq tau
/// iff sigma contains tau, so the minimal open of a face is its own face
/// set (a cone, hence contractible).  The result is T0.
FinSpace face_poset(const SimplicialComplex& K);

/// Order complex of a T0 finite space: vertices are the points, simplices
/// the chains of leq, facets the maximal chains.  Throws NotT0.
SimplicialComplex order_complex(const FinSpace& X);

/// Name used by face_poset for a face, e.g. "{a,b,c}".
std::string face_name(const SimplicialComplex& K, const std::vector<int>& face);

}  // namespace fgpd
