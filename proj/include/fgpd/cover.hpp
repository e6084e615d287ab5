#pragma once

#include <optional>
#include <string>

#include "fgpd/finspace.hpp"
#include "fgpd/group.hpp"
#include "fgpd/simplicial.hpp"
#include "fgpd/todd_coxeter.hpp"

namespace fgpd {

struct Pi1Result {
  std::optional<FiniteGroupTable> group;  // nullopt: cap exceeded
  ToddCoxeterStats stats;
  std::size_t max_cosets = 0;
  SpacePtr component;  // the path component actually presented
  int base_index = -1; // base point within `component`
  SimplicialComplex complex;
  EdgePathPresentation presentation;

  bool exceeded() const { return !group.has_value(); }
};

/// pi1 of the path component of `base`, via the edge-path presentation of
/// the order complex and coset enumeration.  Requires X T0.
Pi1Result fundamental_group(SpacePtr X, const std::string& base,
                            std::size_t max_cosets = 10000);

/// The finite simply connected cover of a path connected T0 space, with
/// its projection and deck action.
struct UniversalCover {
  SpacePtr base;
  SpacePtr total;         // point (x, g) at index x * |deck| + g, named "x#g"
  std::vector<int> proj;  // total -> base
  std::vector<int> grp;   // total -> deck element
  FiniteGroupTable deck;
  int basepoint = 0;      // base index
  SimplicialComplex complex;          // order complex of the base
  EdgePathPresentation presentation;  // edge-path data used for lifting
  std::vector<int> complex_vertex;    // base index -> complex vertex index
  int id = 0;                         // provenance tag

  int point(int x, int g) const { return x * deck.order() + g; }

  /// Right deck action on total points.
  int act(int p, int h) const {
    return point(proj[p], deck.mult(grp[p], h));
  }

  /// Deck element of the one-edge path x -> y, for comparable x, y.
  int transport(int x, int y) const {
    return deck.eval(
        presentation.word_of_edge(complex_vertex[x], complex_vertex[y]));
  }
};

/// Builds the cover (total points = base points x group elements, order
/// lifted along edge-path transports) and verifies the covering and deck
/// invariants before returning.  Throws Disconnected on a disconnected
/// base and LiftInconsistency if any verification fails; returns
/// std::nullopt when the coset enumeration exceeds the cap.
std::optional<UniversalCover> universal_cover(SpacePtr X,
                                              const std::string& base,
                                              std::size_t max_cosets = 10000);

struct DeckActionReport {
  bool free = false;
  bool covering_space_action = false;
  bool hausdorff_criterion = false;
  bool hausdorff_matches_base = false;
  bool proper = true;
  std::string proper_justification;
  std::string witness;
};

/// Checks the action-theoretic properties of the deck action: freeness,
/// the covering-space-action property (minimal opens are the candidate
/// neighbourhoods; larger ones only intersect more), the two-orbit
/// separation criterion, and properness.
DeckActionReport deck_action_report(const UniversalCover& C);

}  // namespace fgpd
