#include "fgpd/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fgpd {

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void subsets_into(const std::vector<int>& facet,
                  std::set<std::vector<int>>& out) {
  const int n = static_cast<int>(facet.size());
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> face;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) face.push_back(facet[i]);
    }
    out.insert(std::move(face));
  }
}

}  // namespace

std::vector<std::vector<int>> SimplicialComplex::faces_of_dim(int d) const {
  std::set<std::vector<int>> out;
  for (const auto& f : facets) {
    if (static_cast<int>(f.size()) < d + 1) continue;
    // enumerate (d+1)-subsets
    std::vector<int> pick(d + 1);
    std::vector<int> idx(d + 1);
    for (int i = 0; i <= d; ++i) idx[i] = i;
    while (true) {
      for (int i = 0; i <= d; ++i) pick[i] = f[idx[i]];
      out.insert(pick);
      int i = d;
      while (i >= 0 && idx[i] == static_cast<int>(f.size()) - (d + 1 - i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j <= d; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {out.begin(), out.end()};
}

std::vector<std::vector<int>> SimplicialComplex::all_faces() const {
  std::set<std::vector<int>> seen;
  for (const auto& f : facets) subsets_into(f, seen);
  std::vector<std::vector<int>> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  return out;
}

bool SimplicialComplex::connected() const {
  if (vertices.empty()) return true;
  std::vector<int> comp(vertices.size(), -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& f : facets) {
      if (std::find(f.begin(), f.end(), v) == f.end()) continue;
      for (int u : f) {
        if (comp[u] == -1) {
          comp[u] = 0;
          stack.push_back(u);
        }
      }
    }
  }
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

SimplicialComplex make_complex(
    const std::vector<std::vector<std::string>>& facets) {
  std::set<std::string> vert_set;
  for (const auto& f : facets) {
    if (f.empty()) throw BadComplex("empty facet");
    for (const auto& v : f) vert_set.insert(v);
  }
  SimplicialComplex K;
  K.vertices.assign(vert_set.begin(), vert_set.end());
  std::map<std::string, int> idx;
  for (int i = 0; i < K.vertex_count(); ++i) idx[K.vertices[i]] = i;

  std::set<std::vector<int>> raw;
  for (const auto& f : facets) {
    std::set<int> s;
    for (const auto& v : f) s.insert(idx[v]);
    raw.insert(std::vector<int>(s.begin(), s.end()));
  }
  for (const auto& f : raw) {
    bool maximal = true;
    for (const auto& g : raw) {
      if (&f != &g && f != g && subset_of(f, g)) {
        maximal = false;
        break;
      }
    }
    if (maximal) K.facets.push_back(f);
  }
  std::sort(K.facets.begin(), K.facets.end());
  return K;
}

std::string face_name(const SimplicialComplex& K,
                      const std::vector<int>& face) {
  std::string s = "{";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) s += ",";
    s += K.vertices[face[i]];
  }
  return s + "}";
}

FinSpace face_poset(const SimplicialComplex& K) {
  auto faces = K.all_faces();
  std::vector<std::string> names;
  names.reserve(faces.size());
  for (const auto& f : faces) names.push_back(face_name(K, f));
  // reorder lexicographically by name, keeping face data aligned
  std::vector<int> order(faces.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return names[a] < names[b]; });
  std::vector<std::string> snames(faces.size());
  std::vector<std::vector<int>> sfaces(faces.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    snames[i] = names[order[i]];
    sfaces[i] = faces[order[i]];
  }
  const int n = static_cast<int>(sfaces.size());
  std::vector<Bitset> up(n, Bitset(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // sigma leq tau iff tau is a face of sigma
      if (subset_of(sfaces[j], sfaces[i])) up[i].set(j);
    }
  }
  return FinSpace(std::move(snames), std::move(up), /*require_t0=*/true);
}

SimplicialComplex order_complex(const FinSpace& X) {
  if (!X.t0()) throw NotT0("order_complex requires a T0 space");
  SimplicialComplex K;
  K.vertices = X.names();
  const int n = X.size();
  // vertices of the complex are ordered like the space's points already
  // (names are unique); but make_complex-style index mapping must agree.
  // X names need not be sorted, so build the sorted vertex list and a map.
  std::vector<std::string> sorted = K.vertices;
  std::sort(sorted.begin(), sorted.end());
  K.vertices = sorted;
  std::map<std::string, int> vidx;
  for (int i = 0; i < n; ++i) vidx[K.vertices[i]] = i;

  // maximal chains by DFS from minimal points along covering relations
  std::vector<std::vector<int>> covers(n);  // covers[i] = points covering i
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !X.leq(i, j)) continue;
      bool is_cover = true;
      for (int k = 0; k < n; ++k) {
        if (k != i && k != j && X.leq(i, k) && X.leq(k, j)) {
          is_cover = false;
          break;
        }
      }
      if (is_cover) covers[i].push_back(j);
    }
  }
  std::set<std::vector<int>> chains;
  std::vector<int> chain;
  auto dfs = [&](auto&& self, int x) -> void {
    chain.push_back(x);
    if (covers[x].empty()) {
      std::vector<int> c;
      for (int p : chain) c.push_back(vidx[X.name(p)]);
      std::sort(c.begin(), c.end());
      chains.insert(std::move(c));
    } else {
      for (int y : covers[x]) self(self, y);
    }
    chain.pop_back();
  };
  for (int i = 0; i < n; ++i) {
    bool minimal = true;
    for (int j = 0; j < n; ++j) {
      if (j != i && X.leq(j, i)) {
        minimal = false;
        break;
      }
    }
    if (minimal) dfs(dfs, i);
  }
  K.facets.assign(chains.begin(), chains.end());
  return K;
}

}  // namespace fgpd
