#include "fgpd/checks.hpp"

#include <algorithm>

namespace fgpd {

namespace {

/// Unit subspace of a groupoid with its index maps.
struct UnitSpace {
  FinSpace space;
  std::vector<int> to_arrow;              // unit index -> arrow index
  std::vector<int> from_arrow;            // arrow index -> unit index or -1

  explicit UnitSpace(const FinTopGroupoid& G) {
    auto sub = subspace(G.arrows, G.units);
    space = std::move(sub.space);
    to_arrow = std::move(sub.to_parent);
    from_arrow.assign(G.size(), -1);
    for (std::size_t i = 0; i < to_arrow.size(); ++i) {
      from_arrow[to_arrow[i]] = static_cast<int>(i);
    }
  }
};

/// Fast composition lookup for the exhaustive associativity scan.
struct MultIndex {
  std::vector<std::vector<int>> by_range;  // unit arrow -> arrows with that r
  std::vector<int> pos;                    // arrow -> position in its r-fiber
  std::vector<std::vector<int>> prod;      // prod[g][pos[h]] for s[g]==r[h]

  explicit MultIndex(const FinTopGroupoid& G) {
    by_range.resize(G.size());
    pos.resize(G.size());
    for (int a = 0; a < G.size(); ++a) {
      pos[a] = static_cast<int>(by_range[G.r[a]].size());
      by_range[G.r[a]].push_back(a);
    }
    prod.resize(G.size());
    for (int g = 0; g < G.size(); ++g) {
      const auto& fiber = by_range[G.s[g]];
      prod[g].resize(fiber.size());
      for (std::size_t i = 0; i < fiber.size(); ++i) {
        prod[g][i] = G.mult(g, fiber[i]);
      }
    }
  }

  int mult(const FinTopGroupoid& G, int g, int h) const {
    return prod[g][pos[h]];
  }
};

}  // namespace

CheckReport check_algebraic_axioms(const FinTopGroupoid& G) {
  CheckReport rep;
  rep.name = "algebraic_axioms";
  const int n = G.size();

  for (auto u = G.units.find_first(); u != Bitset::npos;
       u = G.units.find_next(u)) {
    int ui = static_cast<int>(u);
    if (G.r[ui] != ui || G.s[ui] != ui || G.inv[ui] != ui) {
      rep.fail("unit " + G.arrows.name(ui) + " has nontrivial r/s/inv");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (!G.units.test(G.r[a]) || !G.units.test(G.s[a])) {
      rep.fail("r/s of " + G.arrows.name(a) + " is not a unit");
    }
    if (G.inv[G.inv[a]] != a) {
      rep.fail("inversion not involutive at " + G.arrows.name(a));
    }
    if (G.r[G.inv[a]] != G.s[a] || G.s[G.inv[a]] != G.r[a]) {
      rep.fail("inverse of " + G.arrows.name(a) + " swaps r and s wrongly");
    }
  }
  if (!rep.pass) return rep;

  // multiplication defined exactly on composable pairs
  std::size_t composable_count = 0;
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (G.composable(g, h)) ++composable_count;
    }
  }
  if (composable_count != G.mult_table.size()) {
    rep.fail("multiplication domain is not the composable-pair set");
  }
  for (const auto& [key, p] : G.mult_table) {
    const int g = static_cast<int>(key / n);
    const int h = static_cast<int>(key % n);
    if (!G.composable(g, h)) {
      rep.fail("product defined on non-composable pair");
    } else if (G.r[p] != G.r[g] || G.s[p] != G.s[h]) {
      rep.fail("product endpoints wrong at (" + G.arrows.name(g) + "," +
               G.arrows.name(h) + ")");
    }
  }
  if (!rep.pass) return rep;

  MultIndex mi(G);
  for (int a = 0; a < n; ++a) {
    if (mi.mult(G, G.r[a], a) != a || mi.mult(G, a, G.s[a]) != a) {
      rep.fail("unit law fails at " + G.arrows.name(a));
    }
    if (mi.mult(G, G.inv[a], a) != G.s[a]) {
      rep.fail("s(g) != inv(g)*g at " + G.arrows.name(a));
    }
    if (mi.mult(G, a, G.inv[a]) != G.r[a]) {
      rep.fail("r(g) != g*inv(g) at " + G.arrows.name(a));
    }
  }
  if (!rep.pass) return rep;

  for (int g = 0; g < n && rep.pass; ++g) {
    for (int h : mi.by_range[G.s[g]]) {
      const int gh = mi.mult(G, g, h);
      for (int k : mi.by_range[G.s[h]]) {
        if (mi.mult(G, gh, k) != mi.mult(G, g, mi.mult(G, h, k))) {
          rep.fail("associativity fails at (" + G.arrows.name(g) + "," +
                   G.arrows.name(h) + "," + G.arrows.name(k) + ")");
          break;
        }
      }
      if (!rep.pass) break;
    }
  }
  return rep;
}

CheckReport check_topological(const FinTopGroupoid& G) {
  CheckReport rep;
  rep.name = "topological";
  const int n = G.size();
  const FinSpace& A = G.arrows;

  // inversion
  bool inv_cont = true;
  for (int a = 0; a < n && inv_cont; ++a) {
    for (auto b = A.up(a).find_first(); b != Bitset::npos;
         b = A.up(a).find_next(b)) {
      if (!A.leq(G.inv[a], G.inv[b])) {
        inv_cont = false;
        rep.fail("inversion discontinuous at " + A.name(a));
        break;
      }
    }
  }
  rep.details["inversion_continuous"] = inv_cont;

  // r and s into the unit subspace
  UnitSpace U(G);
  auto aptr = std::make_shared<FinSpace>(A);
  auto uptr = std::make_shared<FinSpace>(U.space);
  for (const char* which : {"r", "s"}) {
    const std::vector<int>& rs = (*which == 'r') ? G.r : G.s;
    std::vector<int> assignment(n);
    for (int a = 0; a < n; ++a) assignment[a] = U.from_arrow[rs[a]];
    SpaceMap map{aptr, uptr, std::move(assignment)};
    const bool cont = is_continuous(map);
    const bool open = is_open_map(map);
    rep.details[std::string(which) + "_continuous"] = cont;
    rep.details[std::string(which) + "_open"] = open;
    if (!cont) rep.fail(std::string(which) + " is not continuous");
    if (!open) rep.fail(std::string(which) + " is not open");
  }

  // multiplication on the composable-pair subspace of the product
  bool mult_cont = true;
  auto pairs = G.composable_pairs();
  for (const auto& [g, h] : pairs) {
    const int gh = G.mult(g, h);
    for (auto g2 = A.up(g).find_first(); g2 != Bitset::npos && mult_cont;
         g2 = A.up(g).find_next(g2)) {
      for (auto h2 = A.up(h).find_first(); h2 != Bitset::npos;
           h2 = A.up(h).find_next(h2)) {
        if (!G.composable(static_cast<int>(g2), static_cast<int>(h2))) {
          continue;
        }
        if (!A.leq(gh, G.mult(static_cast<int>(g2), static_cast<int>(h2)))) {
          mult_cont = false;
          rep.fail("multiplication discontinuous at (" + A.name(g) + "," +
                   A.name(h) + ")");
          break;
        }
      }
    }
    if (!mult_cont) break;
  }
  rep.details["multiplication_continuous"] = mult_cont;

  // Cross-check against the literal preimage criterion by materializing
  // the composable-pair subspace when it is small enough.
  if (pairs.size() <= 4000) {
    std::vector<std::string> names(pairs.size());
    std::vector<Bitset> up(pairs.size(), Bitset(pairs.size()));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      names[i] = "<" + A.name(pairs[i].first) + ";" + A.name(pairs[i].second) +
                 ">";
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (A.leq(pairs[i].first, pairs[j].first) &&
            A.leq(pairs[i].second, pairs[j].second)) {
          up[i].set(j);
        }
      }
    }
    auto cptr = std::make_shared<FinSpace>(std::move(names), std::move(up));
    std::vector<int> assignment(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      assignment[i] = G.mult(pairs[i].first, pairs[i].second);
    }
    SpaceMap m{cptr, aptr, std::move(assignment)};
    const bool preimage_route = is_continuous(m);
    rep.details["multiplication_preimage_cross_check"] =
        (preimage_route == mult_cont);
    if (preimage_route != mult_cont) {
      rep.fail("multiplication continuity criteria disagree");
    }
  }
  return rep;
}

namespace {

/// r restricted to `domain` is a local homeomorphism at every arrow of
/// `domain`, witnessed on minimal opens (any neighbourhood contains the
/// minimal one, so the candidate is definitive).
bool local_homeo_on(const FinTopGroupoid& G, const UnitSpace& U,
                    const std::vector<int>& domain, bool subspace_opens,
                    std::string* witness) {
  const FinSpace& A = G.arrows;
  Bitset dom_set(A.size());
  for (int a : domain) dom_set.set(a);
  for (int a : domain) {
    Bitset w = A.up(a);
    if (subspace_opens) w &= dom_set;
    // injectivity of r on w, image openness, order-iso both ways
    Bitset image(U.space.size());
    std::vector<int> members;
    for (auto b = w.find_first(); b != Bitset::npos; b = w.find_next(b)) {
      const int u = U.from_arrow[G.r[b]];
      if (image.test(u)) {
        if (witness) *witness = "r not injective near " + A.name(a);
        return false;
      }
      image.set(u);
      members.push_back(static_cast<int>(b));
    }
    if (!is_open(U.space, image)) {
      if (witness) *witness = "r image of minimal open at " + A.name(a) +
                              " is not open";
      return false;
    }
    for (int b : members) {
      for (int b2 : members) {
        const bool upstairs = A.leq(b, b2);
        const bool downstairs =
            U.space.leq(U.from_arrow[G.r[b]], U.from_arrow[G.r[b2]]);
        if (upstairs != downstairs) {
          if (witness) *witness = "r not an order iso near " + A.name(a);
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

CheckReport check_local_trivial_etale(const FinTopGroupoid& G) {
  CheckReport rep;
  rep.name = "local_trivial_etale";
  UnitSpace U(G);

  bool locally_trivial = true;
  std::string lt_witness;
  for (auto u = G.units.find_first(); u != Bitset::npos && locally_trivial;
       u = G.units.find_next(u)) {
    locally_trivial = local_homeo_on(G, U, G.source_fiber(static_cast<int>(u)),
                                     /*subspace_opens=*/true, &lt_witness);
  }
  rep.details["locally_trivial"] = locally_trivial;
  if (!locally_trivial) rep.fail(lt_witness);

  std::vector<int> all(G.size());
  for (int a = 0; a < G.size(); ++a) all[a] = a;
  std::string et_witness;
  const bool etale =
      local_homeo_on(G, U, all, /*subspace_opens=*/false, &et_witness);
  rep.details["etale"] = etale;
  if (!etale && rep.witness.empty()) rep.witness = et_witness;
  return rep;
}

CheckReport check_subspace_identifications(const FinTopGroupoid& G,
                                           const UniversalCover& C) {
  CheckReport rep;
  rep.name = "subspace_identifications";
  if (G.provenance != C.id) {
    throw MismatchedProvenance("groupoid was not built from this cover");
  }
  const FinSpace& B = *C.base;
  const FinSpace& T = *C.total;
  const FinSpace& A = G.arrows;
  const int n = B.size();
  const int m = C.deck.order();

  std::map<std::pair<int, int>, int> by_rep;
  for (int a = 0; a < G.size(); ++a) by_rep[G.quotient_reps[a]] = a;
  auto class_of = [&](int p, int q) {
    std::pair<int, int> best{p, q};
    for (int h = 1; h < m; ++h) {
      std::pair<int, int> cand{C.act(p, h), C.act(q, h)};
      if (cand < best) best = cand;
    }
    return by_rep.at(best);
  };

  // (1) the unit subspace is homeomorphic to the base
  std::vector<int> unit_of(n);
  for (int x = 0; x < n; ++x) unit_of[x] = class_of(C.point(x, 0), C.point(x, 0));
  bool units_match = true;
  for (int x = 0; x < n && units_match; ++x) {
    for (int y = 0; y < n; ++y) {
      if (B.leq(x, y) != A.leq(unit_of[x], unit_of[y])) {
        units_match = false;
        rep.fail("unit subspace order differs from base at " + B.name(x));
        break;
      }
    }
  }
  rep.details["units_homeomorphic_to_base"] = units_match;

  // (2) each range fiber with the subspace topology is the cover, with s
  // becoming the projection
  bool fibers_match = true;
  for (int x = 0; x < n && fibers_match; ++x) {
    auto fiber = G.range_fiber(unit_of[x]);
    if (static_cast<int>(fiber.size()) != T.size()) {
      fibers_match = false;
      rep.fail("range fiber size differs from the cover at " + B.name(x));
      break;
    }
    // align representatives so the first coordinate is the fixed lift
    std::vector<int> to_total(fiber.size());
    Bitset seen(T.size());
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      auto [p, q] = G.quotient_reps[fiber[i]];
      const int k = C.deck.inverse(C.grp[p]);  // aligns p to (x, 0)
      const int q2 = C.act(q, k);
      to_total[i] = q2;
      if (seen.test(q2)) {
        fibers_match = false;
        rep.fail("range fiber does not biject with the cover");
        break;
      }
      seen.set(q2);
      if (C.proj[q2] != C.proj[G.quotient_reps[G.s[fiber[i]]].first]) {
        fibers_match = false;
        rep.fail("s does not intertwine the projection at " + B.name(x));
        break;
      }
    }
    for (std::size_t i = 0; i < fiber.size() && fibers_match; ++i) {
      for (std::size_t j = 0; j < fiber.size(); ++j) {
        if (A.leq(fiber[i], fiber[j]) != T.leq(to_total[i], to_total[j])) {
          fibers_match = false;
          rep.fail("range fiber topology differs from the cover at " +
                   B.name(x));
          break;
        }
      }
    }
  }
  rep.details["fibers_homeomorphic_to_cover"] = fibers_match;

  // (3) isotropy groups: discrete subspaces isomorphic to the deck group
  bool isotropy_ok = true;
  bool isotropy_discrete = true;
  for (int x = 0; x < n && isotropy_ok; ++x) {
    const int p0 = C.point(x, 0);
    std::vector<int> iso(m);
    for (int h = 0; h < m; ++h) {
      iso[h] = class_of(p0, C.act(p0, C.deck.inverse(h)));
    }
    for (int h1 = 0; h1 < m && isotropy_ok; ++h1) {
      for (int h2 = 0; h2 < m; ++h2) {
        if (G.mult(iso[h1], iso[h2]) != iso[C.deck.mult(h1, h2)]) {
          isotropy_ok = false;
          rep.fail("isotropy at " + B.name(x) +
                   " is not isomorphic to the deck group");
          break;
        }
        if (h1 != h2 && A.leq(iso[h1], iso[h2])) {
          isotropy_discrete = false;
          rep.fail("isotropy at " + B.name(x) + " is not discrete");
        }
      }
    }
  }
  rep.details["isotropy_isomorphic_to_deck"] = isotropy_ok;
  rep.details["isotropy_discrete"] = isotropy_discrete;

  auto note = G.notes.find("isotropy_discrete");
  const bool recorded = (note != G.notes.end() && note->second == "true");
  rep.details["isotropy_record_matches"] = (recorded == isotropy_discrete);
  if (recorded != isotropy_discrete) {
    rep.fail("isotropy discreteness disagrees with the construction record");
  }
  return rep;
}

CheckReport check_r_times_s(const FinTopGroupoid& G) {
  CheckReport rep;
  rep.name = "r_times_s";
  UnitSpace U(G);
  const FinSpace& A = G.arrows;
  const FinSpace P = product_space(U.space, U.space);
  const int nu = U.space.size();

  auto target = [&](int a) {
    return U.from_arrow[G.r[a]] * nu + U.from_arrow[G.s[a]];
  };

  // surjectivity per path component of the unit space
  auto comps = components(U.space);
  auto comp_of = [&](int u) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (comps[i].test(u)) return static_cast<int>(i);
    }
    return -1;
  };
  Bitset hit(nu * nu);
  for (int a = 0; a < G.size(); ++a) hit.set(target(a));
  bool surjective = true;
  for (int u = 0; u < nu && surjective; ++u) {
    for (int v = 0; v < nu; ++v) {
      if (comp_of(u) == comp_of(v) && !hit.test(u * nu + v)) {
        surjective = false;
        rep.fail("r x s misses the unit pair (" + U.space.name(u) + "," +
                 U.space.name(v) + ")");
        break;
      }
    }
  }
  rep.details["surjective_per_component"] = surjective;

  bool local_homeo = true;
  for (int a = 0; a < G.size() && local_homeo; ++a) {
    Bitset image(nu * nu);
    std::vector<int> members;
    for (auto b = A.up(a).find_first(); b != Bitset::npos;
         b = A.up(a).find_next(b)) {
      const int t = target(static_cast<int>(b));
      if (image.test(t)) {
        local_homeo = false;
        rep.fail("r x s not injective on the minimal open at " + A.name(a));
        break;
      }
      image.set(t);
      members.push_back(static_cast<int>(b));
    }
    if (!local_homeo) break;
    if (!is_open(P, image)) {
      local_homeo = false;
      rep.fail("r x s image of minimal open at " + A.name(a) + " not open");
      break;
    }
    for (int b : members) {
      for (int b2 : members) {
        if (A.leq(b, b2) != P.leq(target(b), target(b2))) {
          local_homeo = false;
          rep.fail("r x s not an order iso near " + A.name(a));
          break;
        }
      }
      if (!local_homeo) break;
    }
  }
  rep.details["local_homeomorphism"] = local_homeo;

  bool injective = true;
  {
    Bitset seen(nu * nu);
    for (int a = 0; a < G.size(); ++a) {
      const int t = target(a);
      if (seen.test(t)) {
        injective = false;
        break;
      }
      seen.set(t);
    }
  }
  rep.details["globally_injective"] = injective;
  return rep;
}

bool simply_connected_iso(const FinTopGroupoid& G, const UniversalCover& C) {
  if (C.deck.order() != 1) {
    throw NotSimplyConnected("the computed fundamental group is nontrivial");
  }
  const int n = C.base->size();
  FinTopGroupoid H = trivial_pair_groupoid(C.base);
  GroupoidMorphism phi;
  phi.source = &G;
  phi.target = &H;
  phi.arrow_map.resize(G.size());
  for (int a = 0; a < G.size(); ++a) {
    const auto [p, q] = G.quotient_reps[a];
    phi.arrow_map[a] = C.proj[p] * n + C.proj[q];
  }
  return groupoid_iso_check(G, H, phi);
}

CheckReport point_set_report(const FinTopGroupoid& G,
                             const UniversalCover& C) {
  CheckReport rep;
  rep.name = "point_set";
  const SpaceReport base = space_report(*C.base);
  const SpaceReport cover = space_report(*C.total);
  const SpaceReport gpd = space_report(G.arrows);

  rep.details["base_hausdorff"] = base.hausdorff;
  rep.details["cover_hausdorff"] = cover.hausdorff;
  rep.details["groupoid_hausdorff"] = gpd.hausdorff;
  rep.details["base_locally_compact"] = base.locally_compact;
  rep.details["cover_locally_compact"] = cover.locally_compact;
  rep.details["groupoid_locally_compact"] = gpd.locally_compact;
  rep.details["base_second_countable"] = base.second_countable;
  rep.details["cover_second_countable"] = cover.second_countable;
  rep.details["groupoid_second_countable"] = gpd.second_countable;
  rep.details["base_paracompact"] = base.paracompact;
  rep.details["cover_paracompact"] = cover.paracompact;
  rep.details["groupoid_paracompact"] = gpd.paracompact;

  if (gpd.hausdorff != base.hausdorff) {
    rep.fail("groupoid Hausdorffness differs from the base");
  }
  if (base.hausdorff && !cover.hausdorff) {
    rep.fail("Hausdorff base with non-Hausdorff cover");
  }
  rep.not_evaluated.push_back(
      "hausdorff: path-space Hausdorffness and closedness of the homotopy "
      "relation (infinite path space)");

  if (base.locally_compact != cover.locally_compact) {
    rep.fail("base and cover disagree on local compactness");
  }
  if (gpd.locally_compact &&
      !(base.locally_compact && cover.locally_compact)) {
    rep.fail("locally compact groupoid over a non-locally-compact base");
  }
  if (base.hausdorff && base.locally_compact && !gpd.locally_compact) {
    rep.fail("Hausdorff locally compact base with non-locally-compact "
             "groupoid");
  }

  if (!(base.second_countable && cover.second_countable &&
        gpd.second_countable)) {
    rep.fail("a finite space reported as not second countable");
  }
  rep.not_evaluated.push_back(
      "second_countable: path-space item (infinite path space)");

  if (gpd.paracompact && !(base.paracompact && cover.paracompact)) {
    rep.fail("paracompact groupoid over non-paracompact base or cover");
  }
  if (base.paracompact && !cover.paracompact) {
    rep.fail("paracompact base with non-paracompact cover");
  }
  return rep;
}

std::map<std::string, CheckReport> run_checks(
    const FundamentalGroupoid::Component& component,
    const std::string& which) {
  std::map<std::string, CheckReport> out;
  if (!component.gpd) return out;
  const FinTopGroupoid& G = *component.gpd;
  const bool all = (which == "all");
  if (all || which == "axioms") {
    out["algebraic_axioms"] = check_algebraic_axioms(G);
  }
  if (all || which == "topology") {
    out["topological"] = check_topological(G);
    out["local_trivial_etale"] = check_local_trivial_etale(G);
    out["r_times_s"] = check_r_times_s(G);
    out["subspace_identifications"] =
        check_subspace_identifications(G, *component.cover);
    CheckReport topo_eq;
    topo_eq.name = "uc_equals_quotient_topology";
    topo_eq.pass = component.comparison.equal &&
                   component.comparison.projection_open &&
                   component.uc_result.parametrization_bijective &&
                   component.uc_result.basis_open &&
                   component.uc_result.general_basics_open &&
                   component.uc_result.nesting_holds;
    topo_eq.details["topologies_equal"] = component.comparison.equal;
    topo_eq.details["projection_open"] = component.comparison.projection_open;
    topo_eq.details["parametrization_bijective"] =
        component.uc_result.parametrization_bijective;
    topo_eq.details["basis_open"] = component.uc_result.basis_open;
    topo_eq.details["general_basics_open"] =
        component.uc_result.general_basics_open;
    topo_eq.details["nesting_holds"] = component.uc_result.nesting_holds;
    if (!topo_eq.pass) {
      topo_eq.witness = !component.comparison.witness.empty()
                            ? component.comparison.witness
                            : component.uc_result.witness;
    }
    out["uc_equals_quotient_topology"] = topo_eq;
  }
  if (all || which == "pointset") {
    out["point_set"] = point_set_report(G, *component.cover);
  }
  return out;
}

}  // namespace fgpd
