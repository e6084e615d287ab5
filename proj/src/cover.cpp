#include "fgpd/cover.hpp"

#include <algorithm>

namespace fgpd {

namespace {

int next_cover_id() {
  static int counter = 0;
  return ++counter;
}

std::vector<int> complex_vertex_map(const FinSpace& X,
                                    const SimplicialComplex& K) {
  std::vector<int> cx(X.size());
  for (int i = 0; i < X.size(); ++i) {
    auto it = std::lower_bound(K.vertices.begin(), K.vertices.end(), X.name(i));
    cx[i] = static_cast<int>(it - K.vertices.begin());
  }
  return cx;
}

}  // namespace

Pi1Result fundamental_group(SpacePtr X, const std::string& base,
                            std::size_t max_cosets) {
  const int b = X->index(base);
  Pi1Result res;
  res.max_cosets = max_cosets;
  auto comps = components(*X);
  auto within = std::find_if(comps.begin(), comps.end(),
                             [&](const Bitset& c) { return c.test(b); });
  if (comps.size() == 1) {
    res.component = X;
  } else {
    res.component = std::make_shared<FinSpace>(subspace(*X, *within).space);
  }
  res.base_index = res.component->index(base);
  res.complex = order_complex(*res.component);
  res.presentation = presentation_from_complex(res.complex, base);
  res.group = todd_coxeter(res.presentation, max_cosets, &res.stats);
  return res;
}

std::optional<UniversalCover> universal_cover(SpacePtr X,
                                              const std::string& base,
                                              std::size_t max_cosets) {
  if (components(*X).size() != 1) {
    throw Disconnected("universal_cover requires a path connected base");
  }
  Pi1Result pi1 = fundamental_group(X, base, max_cosets);
  if (pi1.exceeded()) return std::nullopt;

  UniversalCover C;
  C.base = X;
  C.deck = *pi1.group;
  C.basepoint = X->index(base);
  C.complex = std::move(pi1.complex);
  C.presentation = std::move(pi1.presentation);
  C.complex_vertex = complex_vertex_map(*X, C.complex);
  C.id = next_cover_id();

  const int n = X->size();
  const int m = C.deck.order();
  const int N = n * m;
  C.proj.resize(N);
  C.grp.resize(N);
  std::vector<std::string> names(N);
  for (int x = 0; x < n; ++x) {
    for (int g = 0; g < m; ++g) {
      const int p = x * m + g;
      C.proj[p] = x;
      C.grp[p] = g;
      names[p] = X->name(x) + "#" + std::to_string(g);
    }
  }

  std::vector<Bitset> up(N, Bitset(N));
  for (int x = 0; x < n; ++x) {
    for (auto y = X->up(x).find_first(); y != Bitset::npos;
         y = X->up(x).find_next(y)) {
      const int w = C.transport(x, static_cast<int>(y));
      for (int g = 0; g < m; ++g) {
        up[x * m + g].set(static_cast<int>(y) * m + C.deck.mult(w, g));
      }
    }
  }
  try {
    C.total = std::make_shared<FinSpace>(std::move(names), std::move(up));
  } catch (const Error& e) {
    throw LiftInconsistency(std::string("lifted order rejected: ") + e.what());
  }

  // Even-covering and deck invariants, verified exhaustively.
  const FinSpace& T = *C.total;
  if (!T.t0()) throw LiftInconsistency("cover is not T0");
  if (components(T).size() != 1) {
    throw LiftInconsistency("cover is not path connected");
  }
  for (int p = 0; p < N; ++p) {
    const Bitset& upp = T.up(p);
    if (upp.count() != X->up(C.proj[p]).count()) {
      throw LiftInconsistency("minimal open does not project bijectively");
    }
    Bitset image(n);
    for (auto q = upp.find_first(); q != Bitset::npos; q = upp.find_next(q)) {
      image.set(C.proj[q]);
    }
    if (image != X->up(C.proj[p])) {
      throw LiftInconsistency("minimal open image mismatch");
    }
    // both directions order-preserving on the sheet
    for (auto q = upp.find_first(); q != Bitset::npos; q = upp.find_next(q)) {
      for (auto q2 = upp.find_first(); q2 != Bitset::npos;
           q2 = upp.find_next(q2)) {
        if (T.leq(q, q2) != X->leq(C.proj[q], C.proj[q2])) {
          throw LiftInconsistency("sheet is not an order isomorphism");
        }
      }
    }
  }
  for (int h = 0; h < m; ++h) {
    for (int p = 0; p < N; ++p) {
      const int ph = C.act(p, h);
      if (C.proj[ph] != C.proj[p]) {
        throw LiftInconsistency("deck action does not commute with projection");
      }
      if (h != 0 && ph == p) throw LiftInconsistency("deck action not free");
      for (int q = 0; q < N; ++q) {
        if (T.leq(p, q) != T.leq(ph, C.act(q, h))) {
          throw LiftInconsistency("deck translate is not a homeomorphism");
        }
      }
    }
  }
  // fibers are torsors: free + |fiber| = |deck| gives transitivity
  return C;
}

DeckActionReport deck_action_report(const UniversalCover& C) {
  DeckActionReport r;
  const FinSpace& T = *C.total;
  const int N = T.size();
  const int m = C.deck.order();

  r.free = true;
  for (int p = 0; p < N && r.free; ++p) {
    for (int h = 1; h < m; ++h) {
      if (C.act(p, h) == p) {
        r.free = false;
        r.witness = "stabilizer of " + T.name(p) + " contains element " +
                    std::to_string(h);
        break;
      }
    }
  }

  r.covering_space_action = true;
  for (int p = 0; p < N && r.covering_space_action; ++p) {
    for (int h = 1; h < m; ++h) {
      // translate of the minimal open is the minimal open of the translate
      if (T.up(p).intersects(T.up(C.act(p, h)))) {
        r.covering_space_action = false;
        r.witness = "minimal open of " + T.name(p) +
                    " meets its translate by " + std::to_string(h);
        break;
      }
    }
  }

  r.hausdorff_criterion = true;
  for (int p = 0; p < N && r.hausdorff_criterion; ++p) {
    for (int q = 0; q < N; ++q) {
      if (C.proj[p] == C.proj[q]) continue;  // same orbit
      bool separated = true;
      for (int h = 0; h < m && separated; ++h) {
        if (T.up(C.act(p, h)).intersects(T.up(q))) separated = false;
      }
      if (!separated) {
        r.hausdorff_criterion = false;
        if (r.witness.empty()) {
          r.witness = "orbits of " + T.name(p) + " and " + T.name(q) +
                      " cannot be separated";
        }
        break;
      }
    }
  }
  r.hausdorff_matches_base =
      (r.hausdorff_criterion == space_report(*C.base).hausdorff);

  r.proper = true;
  r.proper_justification =
      "deck group is finite and discrete: for compact K, L the set "
      "{h : hK meets L} is a subset of a finite discrete group, hence "
      "compact";
  return r;
}

}  // namespace fgpd
