#include "fgpd/groupoid.hpp"

#include <algorithm>

namespace fgpd {

std::vector<std::pair<int, int>> FinTopGroupoid::composable_pairs() const {
  std::vector<std::vector<int>> by_range(size());
  for (int a = 0; a < size(); ++a) by_range[r[a]].push_back(a);
  std::vector<std::pair<int, int>> out;
  for (int g = 0; g < size(); ++g) {
    for (int h : by_range[s[g]]) out.emplace_back(g, h);
  }
  return out;
}

std::vector<int> FinTopGroupoid::range_fiber(int u) const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    if (r[a] == u) out.push_back(a);
  }
  return out;
}

std::vector<int> FinTopGroupoid::source_fiber(int u) const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    if (s[a] == u) out.push_back(a);
  }
  return out;
}

FinTopGroupoid trivial_pair_groupoid(SpacePtr X) {
  const int n = X->size();
  FinTopGroupoid G;
  G.arrows = product_space(*X, *X);
  const int N = n * n;
  G.units = Bitset(N);
  G.r.resize(N);
  G.s.resize(N);
  G.inv.resize(N);
  for (int x = 0; x < n; ++x) {
    G.units.set(x * n + x);
    for (int y = 0; y < n; ++y) {
      const int a = x * n + y;
      G.r[a] = x * n + x;
      G.s[a] = y * n + y;
      G.inv[a] = y * n + x;
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int w = 0; w < n; ++w) {
        G.mult_table[G.key(x * n + y, y * n + w)] = x * n + w;
      }
    }
  }
  G.notes["construction"] = "trivial_pair";
  return G;
}

FinTopGroupoid transformation_groupoid(
    SpacePtr X, const FiniteGroupTable& H,
    const std::function<int(int, int)>& action) {
  const int n = X->size();
  const int m = H.order();
  for (int x = 0; x < n; ++x) {
    if (action(x, 0) != x) throw NotAnAction("identity does not act trivially");
  }
  for (int x = 0; x < n; ++x) {
    for (int g = 0; g < m; ++g) {
      for (int t = 0; t < m; ++t) {
        if (action(action(x, g), t) != action(x, H.mult(g, t))) {
          throw NotAnAction("action is not compatible with the group law");
        }
      }
    }
  }
  for (int g = 0; g < m; ++g) {
    Bitset hit(n);
    for (int x = 0; x < n; ++x) {
      int y = action(x, g);
      if (y < 0 || y >= n || hit.test(y)) {
        throw NotAnAction("translate is not a bijection");
      }
      hit.set(y);
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (X->leq(x, y) != X->leq(action(x, g), action(y, g))) {
          throw NotAnAction("translate is not a homeomorphism");
        }
      }
    }
  }

  FinTopGroupoid G;
  const int N = n * m;
  std::vector<std::string> names(N);
  std::vector<Bitset> up(N, Bitset(N));
  for (int x = 0; x < n; ++x) {
    for (int g = 0; g < m; ++g) {
      const int a = x * m + g;
      names[a] = "(" + X->name(x) + "|" + std::to_string(g) + ")";
      for (auto y = X->up(x).find_first(); y != Bitset::npos;
           y = X->up(x).find_next(y)) {
        up[a].set(static_cast<int>(y) * m + g);  // acting group is discrete
      }
    }
  }
  G.arrows = FinSpace(std::move(names), std::move(up));
  G.units = Bitset(N);
  G.r.resize(N);
  G.s.resize(N);
  G.inv.resize(N);
  for (int x = 0; x < n; ++x) {
    G.units.set(x * m);
    for (int g = 0; g < m; ++g) {
      const int a = x * m + g;
      G.r[a] = x * m;
      G.s[a] = action(x, g) * m;
      G.inv[a] = action(x, g) * m + H.inverse(g);
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int g = 0; g < m; ++g) {
      const int y = action(x, g);
      for (int t = 0; t < m; ++t) {
        G.mult_table[G.key(x * m + g, y * m + t)] = x * m + H.mult(g, t);
      }
    }
  }
  G.notes["construction"] = "transformation";
  G.notes["etale"] = "true";  // acting group is discrete
  return G;
}

MorphismCheck verify_morphism(const GroupoidMorphism& m) {
  MorphismCheck c;
  const FinTopGroupoid& G = *m.source;
  const FinTopGroupoid& H = *m.target;
  const auto& f = m.arrow_map;

  for (int a = 0; a < G.size() && c.homomorphism; ++a) {
    if (f[G.r[a]] != H.r[f[a]] || f[G.s[a]] != H.s[f[a]]) {
      c.homomorphism = false;
      c.witness = "r/s not preserved at " + G.arrows.name(a);
    } else if (f[G.inv[a]] != H.inv[f[a]]) {
      c.homomorphism = false;
      c.witness = "inverse not preserved at " + G.arrows.name(a);
    }
  }
  if (c.homomorphism) {
    for (const auto& [g, h] : G.composable_pairs()) {
      if (f[G.mult(g, h)] != H.mult(f[g], f[h])) {
        c.homomorphism = false;
        c.witness = "composition not preserved at (" + G.arrows.name(g) +
                    ", " + G.arrows.name(h) + ")";
        break;
      }
    }
  }

  auto src = std::make_shared<FinSpace>(G.arrows);
  auto dst = std::make_shared<FinSpace>(H.arrows);
  SpaceMap map{src, dst, f};
  c.continuous = is_continuous(map);
  if (!c.continuous && c.witness.empty()) c.witness = "map not continuous";
  c.open = is_open_map(map);
  if (!c.open && c.witness.empty()) c.witness = "map not open";

  Bitset hit(H.size());
  c.bijective = (G.size() == H.size());
  for (int a = 0; a < G.size() && c.bijective; ++a) {
    if (hit.test(f[a])) c.bijective = false;
    hit.set(f[a]);
  }
  if (!c.bijective && c.witness.empty()) c.witness = "map not bijective";
  return c;
}

namespace {

struct ArrowProfile {
  bool unit;
  std::size_t min_open;
  std::size_t down;
  std::size_t range_fiber;
  std::size_t source_fiber;

  auto tie() const {
    return std::tuple(unit, min_open, down, range_fiber, source_fiber);
  }
  bool operator==(const ArrowProfile& o) const { return tie() == o.tie(); }
  bool operator<(const ArrowProfile& o) const { return tie() < o.tie(); }
};

std::vector<ArrowProfile> profiles(const FinTopGroupoid& G) {
  std::vector<std::size_t> rf(G.size(), 0), sf(G.size(), 0);
  for (int a = 0; a < G.size(); ++a) {
    ++rf[G.r[a]];
    ++sf[G.s[a]];
  }
  std::vector<ArrowProfile> out(G.size());
  for (int a = 0; a < G.size(); ++a) {
    out[a] = ArrowProfile{G.is_unit(a), G.arrows.up(a).count(),
                          G.arrows.down(a).count(), rf[G.r[a]], sf[G.s[a]]};
  }
  return out;
}

struct IsoSearch {
  const FinTopGroupoid& G;
  const FinTopGroupoid& H;
  std::vector<ArrowProfile> pg, ph;
  std::vector<int> order;   // G arrows, units first
  std::vector<int> map;     // G arrow -> H arrow or -1
  std::vector<bool> used;   // H arrows
  std::size_t cap;
  std::size_t nodes = 0;

  IsoSearch(const FinTopGroupoid& g, const FinTopGroupoid& h, std::size_t c)
      : G(g), H(h), pg(profiles(g)), ph(profiles(h)), cap(c) {
    for (int a = 0; a < G.size(); ++a) {
      if (G.is_unit(a)) order.push_back(a);
    }
    for (int a = 0; a < G.size(); ++a) {
      if (!G.is_unit(a)) order.push_back(a);
    }
    map.assign(G.size(), -1);
    used.assign(H.size(), false);
  }

  bool feasible(int a, int b) {
    if (used[b]) return false;
    if (!(pg[a] == ph[b])) return false;
    if (G.is_unit(a) != H.is_unit(b)) return false;
    if (map[G.r[a]] != -1 && map[G.r[a]] != H.r[b]) return false;
    if (map[G.s[a]] != -1 && map[G.s[a]] != H.s[b]) return false;
    if (map[G.inv[a]] != -1 && map[G.inv[a]] != H.inv[b]) return false;
    for (int a2 = 0; a2 < G.size(); ++a2) {
      if (map[a2] == -1) continue;
      if (G.arrows.leq(a, a2) != H.arrows.leq(b, map[a2])) return false;
      if (G.arrows.leq(a2, a) != H.arrows.leq(map[a2], b)) return false;
      if (G.composable(a, a2)) {
        int p = G.mult(a, a2);
        if (map[p] != -1 && map[p] != H.mult(b, map[a2])) return false;
      }
      if (G.composable(a2, a)) {
        int p = G.mult(a2, a);
        if (map[p] != -1 && map[p] != H.mult(map[a2], b)) return false;
      }
    }
    return true;
  }

  bool run(std::size_t i) {
    if (++nodes > cap) {
      throw SearchCapExceeded("isomorphism search budget exhausted");
    }
    if (i == order.size()) {
      GroupoidMorphism cand{&G, &H, map};
      return verify_morphism(cand).isomorphism();
    }
    const int a = order[i];
    for (int b = 0; b < H.size(); ++b) {
      if (!feasible(a, b)) continue;
      map[a] = b;
      used[b] = true;
      if (run(i + 1)) return true;
      map[a] = -1;
      used[b] = false;
    }
    return false;
  }
};

}  // namespace

bool groupoid_iso_check(const FinTopGroupoid& G, const FinTopGroupoid& H,
                        const std::optional<GroupoidMorphism>& candidate,
                        std::size_t search_cap) {
  if (candidate) return verify_morphism(*candidate).isomorphism();
  if (G.size() != H.size() || G.units.count() != H.units.count()) return false;
  auto pg = profiles(G);
  auto ph = profiles(H);
  std::sort(pg.begin(), pg.end());
  std::sort(ph.begin(), ph.end());
  if (pg != ph) return false;
  IsoSearch search(G, H, search_cap);
  return search.run(0);
}

}  // namespace fgpd
