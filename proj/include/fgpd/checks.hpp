#pragma once

#include <map>
#include <string>
#include <vector>

#include "fgpd/fundamental_groupoid.hpp"
#include "fgpd/groupoid.hpp"

namespace fgpd {

/// Result of one verification pass.  Checks never throw on a failed
/// property; they record the first counterexample witness instead.
struct CheckReport {
  std::string name;
  bool pass = true;
  std::string witness;
  std::vector<std::string> not_evaluated;
  std::map<std::string, bool> details;

  void fail(const std::string& w) {
    if (pass) witness = w;
    pass = false;
  }
};

/// Exhaustive groupoid axioms: unit laws, inverse laws (s = inv * id and
/// r = id * inv), involution, composability domain, associativity.
CheckReport check_algebraic_axioms(const FinTopGroupoid& G);

/// Continuity of multiplication (on the composable-pair set with the
/// subspace topology of the product), continuity of inversion, and
/// continuity plus openness of r and s into the unit subspace.
CheckReport check_topological(const FinTopGroupoid& G);

/// Local triviality (r restricted to each source fiber is a local
/// homeomorphism) and etaleness (r is a local homeomorphism globally).
/// Both flags land in `details`; minimal opens are the definitive
/// witnesses since any neighbourhood contains them.
CheckReport check_local_trivial_etale(const FinTopGroupoid& G);

/// The three subspace identifications for a quotient-built groupoid:
/// units homeomorphic to the base, range fibers homeomorphic to the cover
/// intertwining s with the projection, and isotropy groups discrete and
/// isomorphic to the deck group (cross-checked against the construction
/// record).
CheckReport check_subspace_identifications(const FinTopGroupoid& G,
                                           const UniversalCover& C);

/// r x s into the product of the unit space with itself: surjectivity per
/// path component and the local-homeomorphism property, witnessed on
/// minimal opens.
CheckReport check_r_times_s(const FinTopGroupoid& G);

/// For a simply connected base: r x s is an isomorphism of topological
/// groupoids onto the trivial-pair groupoid.  Throws NotSimplyConnected
/// when the deck group is nontrivial.
bool simply_connected_iso(const FinTopGroupoid& G, const UniversalCover& C);

/// Point-set comparisons across base, cover and arrow space:
/// Hausdorffness (biconditional with the base), local compactness,
/// second countability, paracompactness.  Path-space items cannot be
/// evaluated on finite models and are listed as such.
CheckReport point_set_report(const FinTopGroupoid& G,
                             const UniversalCover& C);

/// Runs every check on one pipeline component.  `which` selects a group:
/// "all", "axioms", "topology", "pointset".
std::map<std::string, CheckReport> run_checks(
    const FundamentalGroupoid::Component& component,
    const std::string& which = "all");

}  // namespace fgpd
