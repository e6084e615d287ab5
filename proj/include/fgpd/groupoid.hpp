#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fgpd/cover.hpp"
#include "fgpd/finspace.hpp"
#include "fgpd/group.hpp"

namespace fgpd {

/// A finite groupoid whose arrow set carries a finite topology (a preorder,
/// opens = up-sets).  Units are identified with identity arrows; r and s
/// land in the unit arrows, and multiplication is defined exactly on
/// composable pairs.
struct FinTopGroupoid {
  FinSpace arrows;      // points = arrows, preorder = topology
  Bitset units;         // unit arrows
  std::vector<int> r;   // arrow -> unit arrow
  std::vector<int> s;
  std::vector<int> inv;
  std::unordered_map<std::int64_t, int> mult_table;  // composable pairs only

  /// Basic open sets recorded by the construction (used to re-derive the
  /// generated topology and openness of quotient projections).
  std::vector<Bitset> basis;

  /// For groupoids built as a quotient of a cover: canonical orbit
  /// representative (total point pair) per arrow, and the cover's tag.
  std::vector<std::pair<int, int>> quotient_reps;
  int provenance = -1;

  std::map<std::string, std::string> notes;

  int size() const { return arrows.size(); }
  bool is_unit(int a) const { return units.test(a); }
  bool composable(int g, int h) const { return s[g] == r[h]; }

  std::int64_t key(int g, int h) const {
    return static_cast<std::int64_t>(g) * size() + h;
  }

  int mult(int g, int h) const {
    auto it = mult_table.find(key(g, h));
    if (it == mult_table.end()) {
      throw NotComposable("arrows are not composable");
    }
    return it->second;
  }

  std::vector<std::pair<int, int>> composable_pairs() const;

  /// Arrows with range u (u a unit arrow index).
  std::vector<int> range_fiber(int u) const;
  std::vector<int> source_fiber(int u) const;
};

/// The groupoid of the trivial equivalence relation on X: arrows X x X
/// with the product topology, (x,y)(y,w) = (x,w), units the diagonal.
FinTopGroupoid trivial_pair_groupoid(SpacePtr X);

/// Transformation groupoid of a right action of a finite (discrete) group
/// on X: arrows X x H with the product topology, (x,g)(x.g,t) = (x,gt),
/// units X x {e}.  The action must satisfy the action axioms and act by
/// homeomorphisms; NotAnAction otherwise.
FinTopGroupoid transformation_groupoid(
    SpacePtr X, const FiniteGroupTable& H,
    const std::function<int(int, int)>& action);

struct GroupoidMorphism {
  const FinTopGroupoid* source = nullptr;
  const FinTopGroupoid* target = nullptr;
  std::vector<int> arrow_map;
};

struct MorphismCheck {
  bool homomorphism = true;
  bool continuous = true;
  bool open = true;
  bool bijective = true;
  std::string witness;

  bool isomorphism() const {
    return homomorphism && continuous && open && bijective;
  }
};

MorphismCheck verify_morphism(const GroupoidMorphism& m);

/// Isomorphism of topological groupoids.  With a candidate, verifies it;
/// without one, runs a bounded backtracking search seeded by unit
/// matching.  Throws SearchCapExceeded when the search budget runs out
/// before a decision.
bool groupoid_iso_check(const FinTopGroupoid& G, const FinTopGroupoid& H,
                        const std::optional<GroupoidMorphism>& candidate = {},
                        std::size_t search_cap = 2'000'000);

}  // namespace fgpd
