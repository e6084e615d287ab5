#include "fgpd/presentation.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fgpd {

bool EdgePathPresentation::tree_contains(int u, int v) const {
  auto key = std::minmax(u, v);
  return std::binary_search(tree_edges.begin(), tree_edges.end(),
                            std::pair<int, int>{key.first, key.second});
}

Word EdgePathPresentation::word_of_edge(int from, int to) const {
  if (from == to) return {};
  auto key = std::minmax(from, to);
  auto it = edge_gen.find({key.first, key.second});
  if (it == edge_gen.end()) {
    // tree edges carry the empty word; unknown pairs are caller bugs
    if (!tree_contains(key.first, key.second)) {
      throw Error("word_of_edge: not an edge of the complex");
    }
    return {};
  }
  int g = it->second;
  return {from < to ? 2 * g : 2 * g + 1};
}

EdgePathPresentation presentation_from_complex(const SimplicialComplex& K,
                                               const std::string& base) {
  const int n = K.vertex_count();
  auto bit = std::find(K.vertices.begin(), K.vertices.end(), base);
  if (bit == K.vertices.end()) throw UnknownPoint("base vertex not in complex");
  if (!K.connected()) throw Disconnected("complex is not connected");

  EdgePathPresentation P;
  P.base = static_cast<int>(bit - K.vertices.begin());
  P.vertex_count = n;

  auto edges = K.faces_of_dim(1);
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<bool> seen(n, false);
  std::set<std::pair<int, int>> tree;
  std::deque<int> queue{P.base};
  seen[P.base] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : adj[v]) {
      if (!seen[u]) {
        seen[u] = true;
        tree.insert(std::minmax(v, u));
        queue.push_back(u);
      }
    }
  }
  P.tree_edges.assign(tree.begin(), tree.end());

  for (const auto& e : edges) {
    std::pair<int, int> key{e[0], e[1]};
    if (!tree.count(key)) {
      P.edge_gen[key] = static_cast<int>(P.generator_edges.size());
      P.generator_edges.push_back(key);
    }
  }

  for (const auto& t : K.faces_of_dim(2)) {
    const int u = t[0], v = t[1], w = t[2];
    // relation w(v,w) * w(u,v) = w(u,w), written as a relator
    Word rel = P.word_of_edge(v, w);
    for (int l : P.word_of_edge(u, v)) rel.push_back(l);
    for (int l : P.word_of_edge(w, u)) rel.push_back(l);
    P.relators.push_back(std::move(rel));
  }
  return P;
}

}  // namespace fgpd
