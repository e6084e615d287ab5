#include "fgpd/homology.hpp"

#include <algorithm>
#include <map>

namespace fgpd {

namespace {

BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

std::vector<BigInt> smith_diagonal(IntMatrix M) {
  const int rows = static_cast<int>(M.size());
  const int cols = rows ? static_cast<int>(M[0].size()) : 0;
  const int steps = std::min(rows, cols);
  std::vector<BigInt> diag;

  for (int s = 0; s < steps; ++s) {
    // locate the nonzero entry of least magnitude in the working block
    int pr = -1, pc = -1;
    BigInt best = 0;
    for (int i = s; i < rows; ++i) {
      for (int j = s; j < cols; ++j) {
        if (M[i][j] != 0 && (pr < 0 || big_abs(M[i][j]) < best)) {
          best = big_abs(M[i][j]);
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;  // rest of the block is zero
    std::swap(M[s], M[pr]);
    for (int i = 0; i < rows; ++i) std::swap(M[i][s], M[i][pc]);

    bool reduced = false;
    while (!reduced) {
      reduced = true;
      for (int i = s + 1; i < rows; ++i) {
        if (M[i][s] == 0) continue;
        BigInt q = M[i][s] / M[s][s];
        for (int j = s; j < cols; ++j) M[i][j] -= q * M[s][j];
        if (M[i][s] != 0) {
          std::swap(M[s], M[i]);  // remainder is smaller; pivot on it
          reduced = false;
        }
      }
      for (int j = s + 1; j < cols; ++j) {
        if (M[s][j] == 0) continue;
        BigInt q = M[s][j] / M[s][s];
        for (int i = s; i < rows; ++i) M[i][j] -= q * M[i][s];
        if (M[s][j] != 0) {
          for (int i = s; i < rows; ++i) std::swap(M[i][s], M[i][j]);
          reduced = false;
        }
      }
      if (!reduced) continue;
      // pivot must divide the remaining block for the invariant-factor form
      for (int i = s + 1; i < rows && reduced; ++i) {
        for (int j = s + 1; j < cols; ++j) {
          if (M[i][j] % M[s][s] != 0) {
            for (int jj = s; jj < cols; ++jj) M[s][jj] += M[i][jj];
            reduced = false;
            break;
          }
        }
      }
    }
    diag.push_back(big_abs(M[s][s]));
  }
  return diag;
}

H1Summary h1_of_complex(const SimplicialComplex& K) {
  auto edges = K.faces_of_dim(1);
  auto triangles = K.faces_of_dim(2);
  const int nv = K.vertex_count();
  const int ne = static_cast<int>(edges.size());
  const int nt = static_cast<int>(triangles.size());

  std::map<std::vector<int>, int> eidx;
  for (int e = 0; e < ne; ++e) eidx[edges[e]] = e;

  IntMatrix d1(nv, std::vector<BigInt>(ne, 0));
  for (int e = 0; e < ne; ++e) {
    d1[edges[e][0]][e] = -1;
    d1[edges[e][1]][e] = 1;
  }
  IntMatrix d2(ne, std::vector<BigInt>(nt, 0));
  for (int t = 0; t < nt; ++t) {
    const int u = triangles[t][0], v = triangles[t][1], w = triangles[t][2];
    d2[eidx[{v, w}]][t] += 1;
    d2[eidx[{u, w}]][t] -= 1;
    d2[eidx[{u, v}]][t] += 1;
  }

  auto s1 = smith_diagonal(std::move(d1));
  auto s2 = smith_diagonal(std::move(d2));
  auto rank = [](const std::vector<BigInt>& d) {
    return static_cast<int>(
        std::count_if(d.begin(), d.end(), [](const BigInt& x) { return x != 0; }));
  };
  const int r1 = rank(s1);
  const int r2 = rank(s2);

  H1Summary h;
  h.betti = ne - r1 - r2;
  for (const auto& d : s2) {
    if (d > 1) h.torsion.push_back(d);
  }
  return h;
}

}  // namespace fgpd
