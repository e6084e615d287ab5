#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>

#include "fgpd/errors.hpp"

namespace fgpd {

using Rational = boost::multiprecision::cpp_rational;

/// x mod 1, in [0, 1).
Rational frac(const Rational& x);

/// A point of the circle group Q/Z, e^{2 pi i value} with exact value.
struct CircleGroupPoint {
  Rational value;  // in [0,1)

  CircleGroupPoint() = default;
  explicit CircleGroupPoint(const Rational& v) : value(frac(v)) {}

  CircleGroupPoint operator+(const CircleGroupPoint& o) const {
    return CircleGroupPoint(value + o.value);
  }
  CircleGroupPoint operator-() const { return CircleGroupPoint(-value); }
  bool operator==(const CircleGroupPoint& o) const { return value == o.value; }
  bool operator!=(const CircleGroupPoint& o) const { return !(*this == o); }
};

/// A homotopy class of circle paths: the starting point and the exact
/// displacement of a lift.  The end point is always derived.
struct CirclePathClass {
  CircleGroupPoint start;
  Rational disp;

  CircleGroupPoint end() const { return CircleGroupPoint(start.value + disp); }
  bool operator==(const CirclePathClass& o) const {
    return start == o.start && disp == o.disp;
  }
  bool operator!=(const CirclePathClass& o) const { return !(*this == o); }
};

CirclePathClass class_unit(const CircleGroupPoint& at);

/// a after b (arrows compose right to left); requires b.end == a.start.
CirclePathClass class_compose(const CirclePathClass& a,
                              const CirclePathClass& b);
CirclePathClass class_inverse(const CirclePathClass& a);
CirclePathClass class_translate(const CirclePathClass& a,
                                const CircleGroupPoint& g);

/// Pointwise group product of path classes (start points add,
/// displacements add).
CirclePathClass class_pointwise_product(const CirclePathClass& a,
                                        const CirclePathClass& b);

/// An arrow of the transformation groupoid: a lift (element of the real
/// line as the cover of the circle) together with the source point.
struct TransfArrow {
  Rational lift;
  CircleGroupPoint g;

  CircleGroupPoint range() const { return CircleGroupPoint(lift + g.value); }
  bool operator==(const TransfArrow& o) const {
    return lift == o.lift && g == o.g;
  }
};

/// (r_eta, h)(r_gamma, g) with h = p(r_gamma) + g; requires composability.
TransfArrow transf_compose(const TransfArrow& first, const TransfArrow& second);
TransfArrow transf_inverse(const TransfArrow& t);

/// The comparison map J((lift, g)) = (class starting at g with the same
/// displacement, g); its inverse translates the class back to the
/// identity.
std::pair<CirclePathClass, CircleGroupPoint> J_map(const TransfArrow& t);
TransfArrow J_inverse(const CirclePathClass& c, const CircleGroupPoint& g);

/// Open arc of the circle: {anchor + t : 0 < t < length}, length < 1.
struct Arc {
  CircleGroupPoint anchor;
  Rational length;
};

bool arc_contains(const Arc& a, const CircleGroupPoint& p);

/// In-arc coordinate of p, in (0, length); p must lie in the arc.
Rational arc_position(const Arc& a, const CircleGroupPoint& p);

Arc arc_translate(const Arc& a, const CircleGroupPoint& g);

/// Basic set N([cls], U, V) of the groupoid topology: classes obtained by
/// extending cls inside U at the end and inside V at the start.
struct GroupoidBasic {
  CirclePathClass cls;
  Arc U;  // around cls.end
  Arc V;  // around cls.start
};

/// Exact membership test; the in-arc displacements are unique because
/// arcs are shorter than a full turn.  Throws MalformedBasic when the
/// defining class does not have its endpoints in the arcs.
bool uc_arc_membership(const CirclePathClass& c, const GroupoidBasic& n);

/// Basic set N([cls], U) of the cover fiber: one-ended extensions inside
/// U, all classes sharing cls's starting point.
struct CoverBasic {
  CirclePathClass cls;
  Arc U;
};

bool cover_basic_contains(const CoverBasic& n, const CirclePathClass& d);

/// Descriptor of J(N([cls], U) x V): slice at g is the translated cover
/// basic set N([cls . g], U . g).
struct BoxImage {
  CirclePathClass cls;  // starts at the identity
  Arc U;
  Arc V;
};

BoxImage J_basis_image(const CirclePathClass& alpha, const Arc& U,
                       const Arc& V);
bool box_image_contains(const BoxImage& img, const CirclePathClass& d,
                        const CircleGroupPoint& g);

/// Deterministic sample stream (splitmix64) over exact rationals.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// rational in [0,1) with denominator <= max_den
  Rational unit(int max_den = 64);
  /// integer part in [-3,3] plus a unit rational
  Rational displacement(int max_den = 64);
  Arc arc(int max_den = 64);
  /// rational strictly between 0 and `length`
  Rational inside(const Rational& length, int max_den = 64);

 private:
  std::uint64_t state_;
};

struct SampleReport {
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::string first_failure;
  std::map<std::string, std::size_t> checks;  // per-identity pass counts

  bool ok() const { return failures == 0; }
  void record(const std::string& check, bool pass, const std::string& what);
};

/// Joint-of-translated-path lemma plus the two translation identities,
/// on seeded random rational triples; every comparison is exact.
SampleReport verify_translation_lemmas(std::size_t samples,
                                       std::uint64_t seed);

/// J as a groupoid isomorphism: homomorphism on composable pairs,
/// bijectivity on samples, unit and inverse preservation.
SampleReport verify_transformation_theorem(std::size_t samples,
                                           std::uint64_t seed);

/// Basic boxes map to basic sets under J: membership equivalence between
/// the product box and its image, the translated-slice identity, and the
/// match with the two-ended basic sets on the common slice.
SampleReport verify_J_basis_image(std::size_t samples, std::uint64_t seed);

}  // namespace fgpd
