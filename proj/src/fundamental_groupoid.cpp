#include "fgpd/fundamental_groupoid.hpp"

#include <algorithm>
#include <map>

namespace fgpd {

namespace {

/// Lexicographically least representative of the diagonal orbit of (p,q).
std::pair<int, int> canonical_pair(const UniversalCover& C, int p, int q) {
  std::pair<int, int> best{p, q};
  for (int h = 1; h < C.deck.order(); ++h) {
    std::pair<int, int> cand{C.act(p, h), C.act(q, h)};
    if (cand < best) best = cand;
  }
  return best;
}

struct ArrowIndex {
  std::map<std::pair<int, int>, int> by_rep;

  int class_of(const UniversalCover& C, int p, int q) const {
    return by_rep.at(canonical_pair(C, p, q));
  }
};

ArrowIndex arrow_index(const FinTopGroupoid& G) {
  ArrowIndex idx;
  for (int a = 0; a < G.size(); ++a) idx.by_rep[G.quotient_reps[a]] = a;
  return idx;
}

Bitset basic_set(const UniversalCover& C, const ArrowIndex& idx, int arrows,
                 int p, int q) {
  const FinSpace& T = *C.total;
  Bitset out(arrows);
  for (auto p2 = T.up(p).find_first(); p2 != Bitset::npos;
       p2 = T.up(p).find_next(p2)) {
    for (auto q2 = T.up(q).find_first(); q2 != Bitset::npos;
         q2 = T.up(q).find_next(q2)) {
      out.set(idx.class_of(C, static_cast<int>(p2), static_cast<int>(q2)));
    }
  }
  return out;
}

/// The lift of base point u lying on the sheet through total point p
/// (requires u leq proj(p)).
int sheet_lift(const UniversalCover& C, int u, int p) {
  const int w = C.transport(u, C.proj[p]);
  return C.point(u, C.deck.mult(C.deck.inverse(w), C.grp[p]));
}

}  // namespace

FinTopGroupoid quotient_groupoid(const UniversalCover& C) {
  const FinSpace& T = *C.total;
  const int N = T.size();
  const int m = C.deck.order();
  const int n = C.base->size();

  auto product = std::make_shared<FinSpace>(product_space(T, T));

  // enumerate orbits; the first pair seen in index order is the canonical
  // (lexicographically least) representative
  std::map<std::pair<int, int>, int> arrow_of;
  std::vector<std::pair<int, int>> reps;
  std::vector<std::vector<int>> partition;
  for (int p = 0; p < N; ++p) {
    for (int q = 0; q < N; ++q) {
      auto canon = canonical_pair(C, p, q);
      auto it = arrow_of.find(canon);
      int a;
      if (it == arrow_of.end()) {
        a = static_cast<int>(reps.size());
        arrow_of.emplace(canon, a);
        reps.push_back(canon);
        partition.emplace_back();
      } else {
        a = it->second;
      }
      partition[a].push_back(p * N + q);
    }
  }
  const int arrows = static_cast<int>(reps.size());
  if (arrows != n * n * m) {
    throw LiftInconsistency("orbit count disagrees with |X|^2 * |pi1|");
  }

  auto qres = quotient_space(product, partition);

  FinTopGroupoid G;
  {
    std::vector<std::string> names(arrows);
    std::vector<Bitset> up(arrows);
    for (int a = 0; a < arrows; ++a) {
      names[a] = "[" + T.name(reps[a].first) + "|" + T.name(reps[a].second) + "]";
      up[a] = qres.quotient->up(a);
    }
    G.arrows = FinSpace(std::move(names), std::move(up));
  }
  G.quotient_reps = reps;
  G.provenance = C.id;

  ArrowIndex idx;
  idx.by_rep = std::move(arrow_of);

  G.units = Bitset(arrows);
  std::vector<int> unit_of_base(n, -1);
  for (int x = 0; x < n; ++x) {
    int u = idx.class_of(C, C.point(x, 0), C.point(x, 0));
    unit_of_base[x] = u;
    G.units.set(u);
  }
  G.r.resize(arrows);
  G.s.resize(arrows);
  G.inv.resize(arrows);
  for (int a = 0; a < arrows; ++a) {
    const auto [p, q] = reps[a];
    G.r[a] = unit_of_base[C.proj[p]];
    G.s[a] = unit_of_base[C.proj[q]];
    G.inv[a] = idx.class_of(C, q, p);
  }
  // composition [p,q][z,w] with z in the fiber of q: z = q.h resolves h by
  // freeness, and the product is [p, w.h^{-1}]
  for (int a = 0; a < arrows; ++a) {
    const auto [p, q] = reps[a];
    for (int b = 0; b < arrows; ++b) {
      if (G.s[a] != G.r[b]) continue;
      const auto [z, w] = reps[b];
      const int h = C.deck.mult(C.deck.inverse(C.grp[q]), C.grp[z]);
      const int prod =
          idx.class_of(C, p, C.act(w, C.deck.inverse(h)));
      G.mult_table[G.key(a, b)] = prod;
    }
  }

  G.basis.resize(arrows);
  for (int a = 0; a < arrows; ++a) {
    G.basis[a] = basic_set(C, idx, arrows, reps[a].first, reps[a].second);
  }

  bool isotropy_discrete = true;
  for (int x = 0; x < n && isotropy_discrete; ++x) {
    const int p = C.point(x, 0);
    for (int h1 = 0; h1 < m && isotropy_discrete; ++h1) {
      for (int h2 = 0; h2 < m; ++h2) {
        const int a1 = idx.class_of(C, p, C.act(p, h1));
        const int a2 = idx.class_of(C, p, C.act(p, h2));
        if (a1 != a2 && G.arrows.leq(a1, a2)) {
          isotropy_discrete = false;
          break;
        }
      }
    }
  }

  G.notes["construction"] = "fundamental_groupoid_quotient";
  G.notes["isotropy_discrete"] = isotropy_discrete ? "true" : "false";
  G.notes["projection_open"] = qres.projection_open ? "true" : "false";
  G.notes["relation_closed"] = qres.relation_closed ? "true" : "false";
  return G;
}

UcTopologyResult uc_topology(const FinTopGroupoid& G,
                             const UniversalCover& C) {
  if (G.provenance != C.id) {
    throw MismatchedProvenance("groupoid was not built from this cover");
  }
  const int arrows = G.size();
  const FinSpace& T = *C.total;
  auto idx = arrow_index(G);

  UcTopologyResult res;
  std::vector<Bitset> basic(arrows);
  for (int a = 0; a < arrows; ++a) {
    const auto [p, q] = G.quotient_reps[a];
    basic[a] = basic_set(C, idx, arrows, p, q);
    const auto expect = T.up(p).count() * T.up(q).count();
    if (basic[a].count() != expect && res.witness.empty()) {
      res.parametrization_bijective = false;
      res.witness = "N(" + G.arrows.name(a) + ") is not parametrized freely";
    }
  }

  // generated topology: the minimal open of an arrow is the intersection
  // of the basic sets containing it
  std::vector<Bitset> up(arrows);
  for (int c = 0; c < arrows; ++c) {
    Bitset acc(arrows);
    acc.set();
    for (int b = 0; b < arrows; ++b) {
      if (basic[b].test(c)) acc &= basic[b];
    }
    up[c] = std::move(acc);
  }
  for (int a = 0; a < arrows && res.basis_open; ++a) {
    for (auto c = basic[a].find_first(); c != Bitset::npos;
         c = basic[a].find_next(c)) {
      if (!up[c].is_subset_of(basic[a])) {
        res.basis_open = false;
        res.witness = "N(" + G.arrows.name(a) + ") is not open";
        break;
      }
    }
  }

  // general basic sets N(a, U, V) for arbitrary minimal-open pairs of the
  // base containing the endpoints, realized through sheet lifts
  const FinSpace& B = *C.base;
  for (int a = 0; a < arrows; ++a) {
    const auto [p, q] = G.quotient_reps[a];
    const Bitset du = B.down(C.proj[p]);
    const Bitset dv = B.down(C.proj[q]);
    std::vector<std::pair<int, Bitset>> u_sets, v_sets;  // (base pt, lift upset)
    for (auto u = du.find_first(); u != Bitset::npos; u = du.find_next(u)) {
      u_sets.emplace_back(static_cast<int>(u),
                          T.up(sheet_lift(C, static_cast<int>(u), p)));
    }
    for (auto v = dv.find_first(); v != Bitset::npos; v = dv.find_next(v)) {
      v_sets.emplace_back(static_cast<int>(v),
                          T.up(sheet_lift(C, static_cast<int>(v), q)));
    }
    std::vector<std::vector<Bitset>> nsets(u_sets.size());
    for (std::size_t ui = 0; ui < u_sets.size(); ++ui) {
      nsets[ui].resize(v_sets.size());
      for (std::size_t vi = 0; vi < v_sets.size(); ++vi) {
        Bitset nset(arrows);
        for (auto p2 = u_sets[ui].second.find_first(); p2 != Bitset::npos;
             p2 = u_sets[ui].second.find_next(p2)) {
          for (auto q2 = v_sets[vi].second.find_first(); q2 != Bitset::npos;
               q2 = v_sets[vi].second.find_next(q2)) {
            nset.set(idx.class_of(C, static_cast<int>(p2),
                                  static_cast<int>(q2)));
          }
        }
        if (!nset.test(a)) {
          res.general_basics_open = false;
          res.witness = "general basic set misses its own arrow";
        }
        for (auto c = nset.find_first(); c != Bitset::npos;
             c = nset.find_next(c)) {
          if (!up[c].is_subset_of(nset)) {
            if (res.general_basics_open) {
              res.general_basics_open = false;
              res.witness = "general basic set at " + G.arrows.name(a) +
                            " is not open";
            }
            break;
          }
        }
        nsets[ui][vi] = std::move(nset);
      }
    }
    // shrinking U or V shrinks N(a, U, V)
    for (std::size_t ui = 0; ui < u_sets.size() && res.nesting_holds; ++ui) {
      for (std::size_t ui2 = 0; ui2 < u_sets.size() && res.nesting_holds;
           ++ui2) {
        if (!B.leq(u_sets[ui].first, u_sets[ui2].first)) continue;
        for (std::size_t vi = 0; vi < v_sets.size() && res.nesting_holds;
             ++vi) {
          for (std::size_t vi2 = 0; vi2 < v_sets.size(); ++vi2) {
            if (!B.leq(v_sets[vi].first, v_sets[vi2].first)) continue;
            if (!nsets[ui2][vi2].is_subset_of(nsets[ui][vi])) {
              res.nesting_holds = false;
              res.witness = "nested basic sets fail containment at " +
                            G.arrows.name(a);
              break;
            }
          }
        }
      }
    }
  }

  res.topology = FinSpace(G.arrows.names(), std::move(up));
  return res;
}

TopologyComparison topologies_equal(const FinTopGroupoid& G,
                                    const FinSpace& uc) {
  TopologyComparison cmp;
  if (G.arrows.names() != uc.names()) {
    throw Error("topologies_equal: arrow sets differ");
  }
  cmp.equal = true;
  for (int a = 0; a < G.size(); ++a) {
    if (G.arrows.up(a) != uc.up(a)) {
      cmp.equal = false;
      cmp.witness = "minimal opens differ at " + G.arrows.name(a);
      break;
    }
  }
  cmp.projection_open = true;
  for (std::size_t b = 0; b < G.basis.size(); ++b) {
    if (!is_open(G.arrows, G.basis[b])) {
      cmp.projection_open = false;
      if (cmp.witness.empty()) {
        cmp.witness =
            "projected basic image not open at " + G.arrows.name(b);
      }
      break;
    }
  }
  return cmp;
}

FinTopGroupoid disjoint_union(const std::vector<const FinTopGroupoid*>& parts) {
  FinTopGroupoid G;
  int total = 0;
  for (const auto* p : parts) total += p->size();
  std::vector<std::string> names;
  std::vector<Bitset> up(total, Bitset(total));
  G.units = Bitset(total);
  names.reserve(total);
  int off = 0;
  for (const auto* part : parts) {
    const int k = part->size();
    for (int a = 0; a < k; ++a) {
      names.push_back(part->arrows.name(a));
      for (auto b = part->arrows.up(a).find_first(); b != Bitset::npos;
           b = part->arrows.up(a).find_next(b)) {
        up[off + a].set(off + static_cast<int>(b));
      }
      if (part->is_unit(a)) G.units.set(off + a);
      G.r.push_back(part->r[a] + off);
      G.s.push_back(part->s[a] + off);
      G.inv.push_back(part->inv[a] + off);
    }
    off += k;
  }
  G.arrows = FinSpace(std::move(names), std::move(up));
  off = 0;
  for (const auto* part : parts) {
    for (const auto& [key, prod] : part->mult_table) {
      const int g = static_cast<int>(key / part->size());
      const int h = static_cast<int>(key % part->size());
      G.mult_table[G.key(g + off, h + off)] = prod + off;
    }
    for (std::size_t b = 0; b < part->basis.size(); ++b) {
      Bitset grown(total);
      for (auto c = part->basis[b].find_first(); c != Bitset::npos;
           c = part->basis[b].find_next(c)) {
        grown.set(off + static_cast<int>(c));
      }
      G.basis.push_back(std::move(grown));
    }
    off += part->size();
  }
  G.notes["construction"] = "disjoint_union";
  return G;
}

FundamentalGroupoid build_fundamental_groupoid(SpacePtr X,
                                               const BuildOptions& opts) {
  FundamentalGroupoid out;
  out.space = X;
  for (const Bitset& comp : components(*X)) {
    FundamentalGroupoid::Component c;
    if (comp.count() == static_cast<std::size_t>(X->size())) {
      c.base = X;
      c.to_parent.resize(X->size());
      for (int i = 0; i < X->size(); ++i) c.to_parent[i] = i;
    } else {
      auto sub = subspace(*X, comp);
      c.base = std::make_shared<FinSpace>(std::move(sub.space));
      c.to_parent = std::move(sub.to_parent);
    }
    c.basepoint = c.base->name(0);
    if (!opts.basepoint.empty() && c.base->has_point(opts.basepoint)) {
      c.basepoint = opts.basepoint;
    }
    auto cover = universal_cover(c.base, c.basepoint, opts.max_cosets);
    if (!cover) {
      c.exceeded = true;
      Pi1Result pi1 = fundamental_group(c.base, c.basepoint, opts.max_cosets);
      c.stats = pi1.stats;
    } else {
      c.cover = std::move(*cover);
      c.gpd = quotient_groupoid(*c.cover);
      c.uc_result = uc_topology(*c.gpd, *c.cover);
      c.uc = c.uc_result.topology;
      c.comparison = topologies_equal(*c.gpd, *c.uc);
    }
    out.components.push_back(std::move(c));
  }
  if (out.all_finite()) {
    std::vector<const FinTopGroupoid*> parts;
    for (const auto& c : out.components) parts.push_back(&*c.gpd);
    out.combined = disjoint_union(parts);
  }
  return out;
}

GroupoidMorphism induced_morphism(const SpaceMap& f,
                                  const FundamentalGroupoid& dom,
                                  const FundamentalGroupoid& cod) {
  if (!is_continuous(f)) {
    throw NotContinuous("induced_morphism requires a continuous map");
  }
  if (!dom.all_finite() || !cod.all_finite()) {
    throw Error("induced_morphism requires finite fundamental groups");
  }

  // arrow offsets of the combined groupoids
  std::vector<int> dom_off(dom.components.size(), 0);
  for (std::size_t i = 1; i < dom.components.size(); ++i) {
    dom_off[i] = dom_off[i - 1] + dom.components[i - 1].gpd->size();
  }
  std::vector<int> cod_off(cod.components.size(), 0);
  for (std::size_t i = 1; i < cod.components.size(); ++i) {
    cod_off[i] = cod_off[i - 1] + cod.components[i - 1].gpd->size();
  }

  GroupoidMorphism morphism;
  morphism.source = &*dom.combined;
  morphism.target = &*cod.combined;
  morphism.arrow_map.assign(dom.combined->size(), -1);

  for (std::size_t ci = 0; ci < dom.components.size(); ++ci) {
    const auto& dc = dom.components[ci];
    const UniversalCover& DC = *dc.cover;

    // the image of a path connected set lies in one component
    const int first_parent_image = f(dc.to_parent[0]);
    std::size_t target = cod.components.size();
    for (std::size_t cj = 0; cj < cod.components.size(); ++cj) {
      if (cod.components[cj].base->has_point(
              f.cod->name(first_parent_image))) {
        target = cj;
        break;
      }
    }
    if (target == cod.components.size()) {
      throw Error("induced_morphism: image component not found");
    }
    const auto& cc = cod.components[target];
    const UniversalCover& CC = *cc.cover;

    std::vector<int> f_base(dc.base->size());
    for (int x = 0; x < dc.base->size(); ++x) {
      const std::string& img = f.cod->name(f(dc.to_parent[x]));
      if (!cc.base->has_point(img)) {
        throw Error("induced_morphism: image is not inside one component");
      }
      f_base[x] = cc.base->index(img);
    }

    // lift f between the covers: breadth-first transport of the group
    // coordinate, verified consistent on every comparable pair
    const FinSpace& T = *DC.total;
    const int N = T.size();
    std::vector<int> lift(N, -1);
    const int start = DC.point(DC.base->index(dc.basepoint), 0);
    lift[start] = CC.point(f_base[DC.proj[start]], 0);
    std::vector<int> queue{start};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int p = queue[qi];
      for (int q = 0; q < N; ++q) {
        if (q == p || !(T.leq(p, q) || T.leq(q, p))) continue;
        const int fx = f_base[DC.proj[p]];
        const int fy = f_base[DC.proj[q]];
        const int w = CC.transport(fx, fy);
        const int cand =
            CC.point(fy, CC.deck.mult(w, CC.grp[lift[p]]));
        if (lift[q] == -1) {
          lift[q] = cand;
          queue.push_back(q);
        } else if (lift[q] != cand) {
          throw LiftInconsistency("induced lift disagrees along two routes");
        }
      }
    }

    auto cc_index = arrow_index(*cc.gpd);
    for (int a = 0; a < dc.gpd->size(); ++a) {
      const auto [p, q] = dc.gpd->quotient_reps[a];
      morphism.arrow_map[dom_off[ci] + a] =
          cod_off[target] + cc_index.class_of(CC, lift[p], lift[q]);
    }
  }

  MorphismCheck check = verify_morphism(morphism);
  if (!check.homomorphism || !check.continuous) {
    throw std::logic_error("induced_morphism: verification failed: " +
                           check.witness);
  }
  return morphism;
}

}  // namespace fgpd
