#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "fgpd/bitset.hpp"
#include "fgpd/errors.hpp"

namespace fgpd {

/// A finite topological (Alexandrov) space, encoded as a preorder on named
/// points.  A set is open iff it is an up-set of `leq`; the minimal open
/// neighbourhood of a point x is its up-set {y : x leq y}.
///
/// Instances are immutable after construction.  The constructor validates
/// reflexivity and transitivity; antisymmetry (T0) is detected and exposed
/// as a property, and can be demanded via `require_t0`.
class FinSpace {
 public:
  FinSpace() = default;

  /// `up[i]` must be the up-set of point i (reflexive, transitive).
  FinSpace(std::vector<std::string> names, std::vector<Bitset> up,
           bool require_t0 = false);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a named point; throws UnknownPoint.
  int index(const std::string& point) const;
  bool has_point(const std::string& point) const;

  bool leq(int i, int j) const { return up_[i].test(j); }

  /// Up-set of i: the minimal open neighbourhood of i.
  const Bitset& up(int i) const { return up_[i]; }

  /// Down-set of i: the closure of {i}.
  Bitset down(int i) const;

  bool t0() const { return t0_; }

  bool operator==(const FinSpace& other) const {
    return names_ == other.names_ && up_ == other.up_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Bitset> up_;
  std::unordered_map<std::string, int> index_;
  bool t0_ = false;
};

using SpacePtr = std::shared_ptr<const FinSpace>;

/// An open set of a finite space.  The member bitset is validated to be an
/// up-set on construction.
struct OpenSet {
  SpacePtr space;
  Bitset members;

  OpenSet(SpacePtr s, Bitset m);
};

/// A total map between finite spaces.  Continuity is a queried property,
/// not an invariant.
struct SpaceMap {
  SpacePtr dom;
  SpacePtr cod;
  std::vector<int> assignment;  // dom point index -> cod point index

  int operator()(int i) const { return assignment[i]; }
};

SpaceMap identity_map(SpacePtr X);
SpaceMap compose(const SpaceMap& g, const SpaceMap& f);  // g after f

/// Builds a space from order-generating pairs (x leq y).  `leq` becomes the
/// reflexive-transitive closure; point order is lexicographic in the names.
/// Throws CycleWithT0Flag when `require_t0` and the closure has a
/// nontrivial cycle.
FinSpace from_relations(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const std::vector<std::string>& isolated = {}, bool require_t0 = false);

/// True iff S is an up-set of X.
bool is_open(const FinSpace& X, const Bitset& S);

/// Minimal open neighbourhood of a named point; throws UnknownPoint.
OpenSet minimal_open(SpacePtr X, const std::string& point);

/// Continuity of a total map between finite spaces.  Evaluates both the
/// order-preservation criterion and the preimage-of-minimal-opens
/// criterion and insists they agree.
bool is_continuous(const SpaceMap& f);

/// True iff images of all minimal opens are open (sufficient: images of a
/// basis generate all images).
bool is_open_map(const SpaceMap& f);

/// Product space; points named "(a,b)", ordered componentwise.  Point
/// (i, j) of the factors lands at index i * |B| + j.
FinSpace product_space(const FinSpace& A, const FinSpace& B);

struct QuotientResult {
  SpacePtr quotient;
  SpaceMap projection;
  bool projection_open = false;
  bool relation_closed = false;
  bool quotient_hausdorff = false;
  /// Engaged when the projection is open; then reports whether
  /// (relation closed <=> quotient Hausdorff) held.
  bool biconditional_applies = false;
  bool biconditional_holds = false;
};

/// Quotient by a partition, computed definitionally: a class-set is open
/// iff its preimage is an up-set; the result is returned as the preorder
/// recovered from minimal opens of classes.  Also decides whether the
/// induced equivalence relation is closed in X x X and, when the
/// projection is open, whether closedness matches Hausdorffness of the
/// quotient.  Throws BadPartition.
QuotientResult quotient_space(SpacePtr X,
                              const std::vector<std::vector<int>>& partition);
QuotientResult quotient_space(
    SpacePtr X, const std::vector<std::vector<std::string>>& partition);

struct SpaceReport {
  bool hausdorff = false;
  bool t0 = false;
  bool locally_compact = false;
  bool second_countable = true;  // finite spaces always are
  bool paracompact = false;      // for finite spaces: same as hausdorff
  int path_components = 0;
  bool hypotheses_certificate = false;
  std::string certificate_witness;
};

/// Point-set summary of a finite space.  `locally_compact` follows the
/// quasicompact-plus-Hausdorff reading of compactness, which on finite
/// spaces degenerates to: every point has an antichain neighbourhood
/// (equivalently its minimal open is a singleton).
SpaceReport space_report(const FinSpace& X);

/// Path components = connected components of the comparability graph,
/// ordered by least point index.
std::vector<Bitset> components(const FinSpace& X);

struct Subspace {
  FinSpace space;
  std::vector<int> to_parent;  // subspace index -> parent index
};

/// Subspace on the given points (order restriction), keeping parent order.
Subspace subspace(const FinSpace& X, const Bitset& points);

}  // namespace fgpd
