#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgpd/cover.hpp"
#include "fgpd/groupoid.hpp"

namespace fgpd {

/// The quotient groupoid (total x total)/deck of a universal cover:
/// arrows are diagonal orbits named by their lexicographically least
/// representative pair, composition resolves the deck element by freeness,
/// and the topology is the quotient topology of the product space,
/// computed definitionally.  Records the generating basis (images of the
/// product's minimal opens), the provenance tag, and construction-time
/// notes (arrow-count formula, isotropy discreteness, projection
/// openness).
FinTopGroupoid quotient_groupoid(const UniversalCover& C);

struct UcTopologyResult {
  FinSpace topology;  // preorder on the same arrow set
  bool parametrization_bijective = true;  // |N(a)| = |up(p)| * |up(q)|
  bool basis_open = true;                 // every N(a) open in the generated topology
  bool general_basics_open = true;        // N(a,U,V) open for all basic (U,V)
  bool nesting_holds = true;              // N(a,U',V') contained in N(a,U,V)
  std::string witness;
};

/// The topology generated by the basic sets N(a) = classes of
/// up(p) x up(q) over the canonical representative of each arrow; minimal
/// opens are intersections of the basic sets containing an arrow.  Also
/// verifies that the general basic sets built from arbitrary minimal-open
/// pairs of the base are open, and that shrinking the defining opens
/// shrinks the basic sets.  Throws MismatchedProvenance when G was not
/// built from C.
UcTopologyResult uc_topology(const FinTopGroupoid& G, const UniversalCover& C);

struct TopologyComparison {
  bool equal = false;
  bool projection_open = false;
  std::string witness;
};

/// Exact comparison of the groupoid's (quotient) topology with a second
/// preorder on the same arrows, plus openness of the quotient projection
/// (every recorded basic image must be open).
TopologyComparison topologies_equal(const FinTopGroupoid& G,
                                    const FinSpace& uc_topology);

struct BuildOptions {
  std::size_t max_cosets = 10000;
  /// Basepoint override for the component containing it; other components
  /// use their least point.
  std::string basepoint;
};

/// The fundamental groupoid pipeline, run per path component; the whole-
/// space groupoid is the disjoint union of the component groupoids.
struct FundamentalGroupoid {
  struct Component {
    SpacePtr base;
    std::vector<int> to_parent;
    std::string basepoint;
    bool exceeded = false;
    ToddCoxeterStats stats;
    std::optional<UniversalCover> cover;
    std::optional<FinTopGroupoid> gpd;
    std::optional<FinSpace> uc;
    TopologyComparison comparison;
    UcTopologyResult uc_result;
  };

  SpacePtr space;
  std::vector<Component> components;
  std::optional<FinTopGroupoid> combined;

  bool all_finite() const {
    for (const auto& c : components) {
      if (c.exceeded) return false;
    }
    return true;
  }
};

FundamentalGroupoid build_fundamental_groupoid(SpacePtr X,
                                               const BuildOptions& opts = {});

/// Disjoint union of groupoids (block topology, no relations across
/// blocks).
FinTopGroupoid disjoint_union(const std::vector<const FinTopGroupoid*>& parts);

/// The functor on arrows: transports an arrow's representative pair
/// through the lift of f between the covers and classifies the image.
/// The morphism acts between the combined groupoids; the result is
/// verified to be a continuous groupoid homomorphism.  Throws
/// NotContinuous when f is not continuous.
GroupoidMorphism induced_morphism(const SpaceMap& f,
                                  const FundamentalGroupoid& dom,
                                  const FundamentalGroupoid& cod);

}  // namespace fgpd
