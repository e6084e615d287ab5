#include "fgpd/circle.hpp"

namespace fgpd {

Rational frac(const Rational& x) {
  using boost::multiprecision::cpp_int;
  cpp_int num = numerator(x);
  cpp_int den = denominator(x);
  cpp_int q = num / den;
  if (num < 0 && q * den != num) q -= 1;  // floor division
  return x - Rational(q);
}

CirclePathClass class_unit(const CircleGroupPoint& at) {
  return CirclePathClass{at, Rational(0)};
}

CirclePathClass class_compose(const CirclePathClass& a,
                              const CirclePathClass& b) {
  if (b.end() != a.start) {
    throw NotComposable("class_compose: endpoint mismatch");
  }
  return CirclePathClass{b.start, a.disp + b.disp};
}

CirclePathClass class_inverse(const CirclePathClass& a) {
  return CirclePathClass{a.end(), -a.disp};
}

CirclePathClass class_translate(const CirclePathClass& a,
                                const CircleGroupPoint& g) {
  return CirclePathClass{a.start + g, a.disp};
}

CirclePathClass class_pointwise_product(const CirclePathClass& a,
                                        const CirclePathClass& b) {
  return CirclePathClass{a.start + b.start, a.disp + b.disp};
}

TransfArrow transf_compose(const TransfArrow& first,
                           const TransfArrow& second) {
  if (second.range() != first.g) {
    throw NotComposable("transf_compose: endpoint mismatch");
  }
  return TransfArrow{first.lift + second.lift, second.g};
}

TransfArrow transf_inverse(const TransfArrow& t) {
  return TransfArrow{-t.lift, t.range()};
}

std::pair<CirclePathClass, CircleGroupPoint> J_map(const TransfArrow& t) {
  return {CirclePathClass{t.g, t.lift}, t.g};
}

TransfArrow J_inverse(const CirclePathClass& c, const CircleGroupPoint& g) {
  if (c.start != g) throw Error("J_inverse: class does not start at g");
  return TransfArrow{c.disp, g};
}

bool arc_contains(const Arc& a, const CircleGroupPoint& p) {
  const Rational t = frac(p.value - a.anchor.value);
  return t > 0 && t < a.length;
}

Rational arc_position(const Arc& a, const CircleGroupPoint& p) {
  const Rational t = frac(p.value - a.anchor.value);
  if (!(t > 0 && t < a.length)) {
    throw Error("arc_position: point outside the arc");
  }
  return t;
}

Arc arc_translate(const Arc& a, const CircleGroupPoint& g) {
  return Arc{a.anchor + g, a.length};
}

bool uc_arc_membership(const CirclePathClass& c, const GroupoidBasic& n) {
  if (!arc_contains(n.U, n.cls.end()) || !arc_contains(n.V, n.cls.start)) {
    throw MalformedBasic("basic set does not contain its own class");
  }
  if (!arc_contains(n.V, c.start) || !arc_contains(n.U, c.end())) return false;
  // the connecting paths inside the arcs have unique displacements:
  // start-side from c.start to cls.start inside V, end-side from cls.end
  // to c.end inside U
  const Rational dv =
      arc_position(n.V, n.cls.start) - arc_position(n.V, c.start);
  const Rational du =
      arc_position(n.U, c.end()) - arc_position(n.U, n.cls.end());
  return c.disp == n.cls.disp + dv + du;
}

bool cover_basic_contains(const CoverBasic& n, const CirclePathClass& d) {
  if (!arc_contains(n.U, n.cls.end())) {
    throw MalformedBasic("cover basic set does not contain its own class");
  }
  if (d.start != n.cls.start || !arc_contains(n.U, d.end())) return false;
  const Rational du =
      arc_position(n.U, d.end()) - arc_position(n.U, n.cls.end());
  return d.disp == n.cls.disp + du;
}

BoxImage J_basis_image(const CirclePathClass& alpha, const Arc& U,
                       const Arc& V) {
  if (alpha.start != CircleGroupPoint()) {
    throw MalformedBasic("cover classes start at the identity");
  }
  if (!arc_contains(U, alpha.end())) {
    throw MalformedBasic("arc U must contain the class end point");
  }
  return BoxImage{alpha, U, V};
}

bool box_image_contains(const BoxImage& img, const CirclePathClass& d,
                        const CircleGroupPoint& g) {
  if (!arc_contains(img.V, g) || d.start != g) return false;
  return cover_basic_contains(CoverBasic{img.cls, img.U},
                              class_translate(d, -g));
}

std::uint64_t SampleRng::next() {
  state_ += 0x9E3779B97f4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rational SampleRng::unit(int max_den) {
  const std::uint64_t den = 1 + next() % static_cast<std::uint64_t>(max_den);
  const std::uint64_t num = next() % den;
  return Rational(num, den);
}

Rational SampleRng::displacement(int max_den) {
  const std::int64_t whole = static_cast<std::int64_t>(next() % 7) - 3;
  return Rational(whole) + unit(max_den);
}

Arc SampleRng::arc(int max_den) {
  const std::uint64_t den =
      2 + next() % static_cast<std::uint64_t>(max_den - 1);
  const std::uint64_t num = 1 + next() % (den - 1);
  return Arc{CircleGroupPoint(unit(max_den)), Rational(num, den)};
}

Rational SampleRng::inside(const Rational& length, int max_den) {
  const std::uint64_t den =
      2 + next() % static_cast<std::uint64_t>(max_den - 1);
  const std::uint64_t num = 1 + next() % (den - 1);
  return length * Rational(num, den);
}

void SampleReport::record(const std::string& check, bool pass,
                          const std::string& what) {
  ++samples;
  if (pass) {
    ++checks[check];
  } else {
    ++failures;
    if (first_failure.empty()) first_failure = check + ": " + what;
  }
}

namespace {

std::string show(const CirclePathClass& c) {
  return "(start " + c.start.value.str() + ", disp " + c.disp.str() + ")";
}

}  // namespace

SampleReport verify_translation_lemmas(std::size_t samples,
                                       std::uint64_t seed) {
  SampleReport rep;
  SampleRng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const CirclePathClass eta{CircleGroupPoint(), rng.displacement()};
    const CirclePathClass gamma{CircleGroupPoint(), rng.displacement()};
    const CircleGroupPoint g(rng.unit());

    // [(eta . gamma(1)  concat  gamma) . g] = [(eta x gamma) . g]
    const CirclePathClass joined =
        class_compose(class_translate(eta, gamma.end()), gamma);
    const CirclePathClass lhs = class_translate(joined, g);
    const CirclePathClass rhs =
        class_translate(class_pointwise_product(eta, gamma), g);
    rep.record("joint_of_translated_path", lhs == rhs,
               show(lhs) + " vs " + show(rhs));

    // g = identity: concatenation equals the pointwise product in the fiber
    rep.record("joint_at_identity",
               joined == class_pointwise_product(eta, gamma), show(joined));

    // (eta x gamma) . g = eta x (gamma . g)
    const CirclePathClass e1l =
        class_translate(class_pointwise_product(eta, gamma), g);
    const CirclePathClass e1r =
        class_pointwise_product(eta, class_translate(gamma, g));
    rep.record("product_with_translate", e1l == e1r,
               show(e1l) + " vs " + show(e1r));

    // (delta concat theta) . g = (delta . g) concat (theta . g)
    const CirclePathClass theta{CircleGroupPoint(rng.unit()),
                                rng.displacement()};
    const CirclePathClass delta{theta.end(), rng.displacement()};
    const CirclePathClass e2l =
        class_translate(class_compose(delta, theta), g);
    const CirclePathClass e2r =
        class_compose(class_translate(delta, g), class_translate(theta, g));
    rep.record("concat_with_translate", e2l == e2r,
               show(e2l) + " vs " + show(e2r));
  }
  return rep;
}

SampleReport verify_transformation_theorem(std::size_t samples,
                                           std::uint64_t seed) {
  SampleReport rep;
  SampleRng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Rational r_eta = rng.displacement();
    const Rational r_gamma = rng.displacement();
    const CircleGroupPoint g(rng.unit());

    const TransfArrow second{r_gamma, g};
    const TransfArrow first{r_eta, second.range()};
    const TransfArrow product = transf_compose(first, second);
    rep.record("transf_composition",
               product == TransfArrow{r_eta + r_gamma, g},
               "product formula");

    const auto [jc1, jg1] = J_map(first);
    const auto [jc2, jg2] = J_map(second);
    const auto [jcp, jgp] = J_map(product);
    const CirclePathClass composed = class_compose(jc1, jc2);
    rep.record("J_homomorphism", jcp == composed && jgp == jg2,
               show(jcp) + " vs " + show(composed));

    // units and inverses
    const TransfArrow unit{Rational(0), g};
    const auto [juc, jug] = J_map(unit);
    rep.record("J_units", juc == class_unit(g) && jug == g, show(juc));
    const auto [jic, jig] = J_map(transf_inverse(second));
    rep.record("J_inverses",
               jic == class_inverse(jc2) && jig == jc2.end(), show(jic));

    // bijectivity on samples
    const TransfArrow back = J_inverse(jc2, jg2);
    rep.record("J_bijective_arrow", back == second, "J round trip");
    const CirclePathClass c{g, rng.displacement()};
    const auto [jc3, jg3] = J_map(J_inverse(c, g));
    rep.record("J_bijective_class", jc3 == c && jg3 == g, show(jc3));
  }
  return rep;
}

SampleReport verify_J_basis_image(std::size_t samples, std::uint64_t seed) {
  SampleReport rep;
  SampleRng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Arc U = rng.arc();
    const Arc V = rng.arc();
    // a class from the identity whose end lies inside U
    const Rational end_pos = rng.inside(U.length);
    const CircleGroupPoint end(U.anchor.value + end_pos);
    const std::int64_t winding = static_cast<std::int64_t>(rng.next() % 5) - 2;
    const CirclePathClass alpha{CircleGroupPoint(),
                                end.value + Rational(winding)};
    const BoxImage img = J_basis_image(alpha, U, V);
    const CoverBasic n_alpha{alpha, U};

    // a member of the box: extend alpha inside U, pick g inside V
    const Rational e2 = rng.inside(U.length);
    const CirclePathClass member{
        CircleGroupPoint(),
        alpha.disp + (e2 - arc_position(U, alpha.end()))};
    const CircleGroupPoint g(V.anchor.value + rng.inside(V.length));
    rep.record("box_member", cover_basic_contains(n_alpha, member),
               "constructed member escapes N(alpha, U)");

    // membership equivalence under J, on the member and on perturbations
    const auto [jm, jg] = J_map(J_inverse(class_translate(member, g), g));
    rep.record("image_membership", box_image_contains(img, jm, jg),
               "J image of a member not in the image set");
    CirclePathClass spun = class_translate(member, g);
    spun.disp += 1;  // a full extra loop cannot stay inside the arcs
    rep.record("image_excludes_loop", !box_image_contains(img, spun, g),
               "extra winding accepted");

    // translated-slice identity: the g-slice of the image is the
    // translated cover basic set
    const CoverBasic slice{class_translate(alpha, g), arc_translate(U, g)};
    const CirclePathClass probe{g, rng.displacement()};
    const bool via_pullback = box_image_contains(img, probe, g);
    const bool via_slice = cover_basic_contains(slice, probe);
    rep.record("slice_identity", via_pullback == via_slice, show(probe));

    // on the common slice the two-ended basic set agrees
    const GroupoidBasic two_ended{class_translate(alpha, g),
                                  arc_translate(U, g), V};
    const bool via_groupoid_basic = uc_arc_membership(probe, two_ended);
    rep.record("groupoid_basic_slice", via_groupoid_basic == via_pullback,
               show(probe));
  }
  return rep;
}

}  // namespace fgpd
