#pragma once

#include <json.hpp>
#include <string>

#include "fgpd/checks.hpp"
#include "fgpd/circle.hpp"
#include "fgpd/fundamental_groupoid.hpp"
#include "fgpd/simplicial.hpp"

namespace fgpd {

using Json = nlohmann::json;

/// Poset text: one `x < y` per line, `point x` for isolated points, `#`
/// comments.  Throws ParseError.
FinSpace parse_poset_text(const std::string& text);

/// Simplicial JSON: {"facets": [["a","b","c"], ...]}.  Throws ParseError.
SimplicialComplex parse_simplicial_json(const std::string& text);

Json groupoid_to_json(const FinTopGroupoid& G);

/// Validates the schema and the groupoid axioms; throws ParseError.
FinTopGroupoid groupoid_from_json(const Json& j);

/// Arrow graph in DOT: nodes are units, one edge per arrow from its source
/// to its range, labelled "r<-s [k]" with k the isotropy index.
std::string dot_export(const FinTopGroupoid& G,
                       const std::vector<int>& isotropy_index = {});

/// Deck element g_p * g_q^{-1} of each arrow's representative (invariant
/// under the diagonal action); indexes arrows within their isotropy class.
std::vector<int> isotropy_indices(const FinTopGroupoid& G,
                                  const UniversalCover& C);

Json to_json(const SpaceReport& r);
Json to_json(const CheckReport& r);
Json to_json(const SampleReport& r);
Json to_json(const DeckActionReport& r);

}  // namespace fgpd
