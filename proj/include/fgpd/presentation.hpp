#pragma once

#include <map>
#include <string>
#include <vector>

#include "fgpd/simplicial.hpp"

namespace fgpd {

/// Letters encode generators and their inverses: letter 2g is generator g,
/// letter 2g+1 its inverse.
using Word = std::vector<int>;

inline int letter_inverse(int letter) { return letter ^ 1; }

/// Edge-path presentation of the fundamental group of a complex's
/// 2-skeleton at a base vertex: a spanning tree kills its edges, every
/// other edge of the 1-skeleton is a generator, and every triangle
/// contributes one relator.  Conventions are fixed so that, for a chain
/// u < v < w of vertices, the one-edge transports satisfy
/// w(v,w) * w(u,v) = w(u,w) in the presented group.
struct EdgePathPresentation {
  int base = 0;                                    // vertex index
  int vertex_count = 0;
  std::vector<std::pair<int, int>> tree_edges;     // (u,v), u < v
  std::vector<std::pair<int, int>> generator_edges;
  std::vector<Word> relators;
  std::map<std::pair<int, int>, int> edge_gen;  // {u,v}->generator, absent=tree

  int generator_count() const {
    return static_cast<int>(generator_edges.size());
  }

  bool tree_contains(int u, int v) const;

  /// Word of the directed edge from->to: empty for tree edges and loops,
  /// one letter otherwise.  Throws if {from,to} is not an edge.
  Word word_of_edge(int from, int to) const;
};

/// Base is a vertex name of K; K must be connected (Disconnected otherwise).
/// The spanning tree is grown breadth-first with neighbours visited in
/// index order, so the presentation is deterministic.
EdgePathPresentation presentation_from_complex(const SimplicialComplex& K,
                                               const std::string& base);

}  // namespace fgpd
