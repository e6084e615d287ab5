#include "fgpd/io.hpp"

#include <algorithm>
#include <sstream>

namespace fgpd {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

FinSpace parse_poset_text(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> isolated;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("point ", 0) == 0) {
      std::string p = trim(line.substr(6));
      if (p.empty() || p.find(' ') != std::string::npos) {
        throw ParseError("line " + std::to_string(lineno) +
                         ": malformed point declaration");
      }
      isolated.push_back(p);
      continue;
    }
    auto lt = line.find('<');
    if (lt == std::string::npos) {
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected `x < y` or `point x`");
    }
    std::string a = trim(line.substr(0, lt));
    std::string b = trim(line.substr(lt + 1));
    if (a.empty() || b.empty() || a.find(' ') != std::string::npos ||
        b.find(' ') != std::string::npos) {
      throw ParseError("line " + std::to_string(lineno) +
                       ": malformed relation");
    }
    pairs.emplace_back(a, b);
  }
  if (pairs.empty() && isolated.empty()) {
    throw ParseError("no points declared");
  }
  return from_relations(pairs, isolated);
}

SimplicialComplex parse_simplicial_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array()) {
    throw ParseError("expected an object with a \"facets\" array");
  }
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : j["facets"]) {
    if (!f.is_array() || f.empty()) {
      throw ParseError("each facet must be a nonempty array of vertex names");
    }
    std::vector<std::string> facet;
    for (const auto& v : f) {
      if (!v.is_string()) throw ParseError("vertex names must be strings");
      facet.push_back(v.get<std::string>());
    }
    facets.push_back(std::move(facet));
  }
  try {
    return make_complex(facets);
  } catch (const BadComplex& e) {
    throw ParseError(e.what());
  }
}

Json groupoid_to_json(const FinTopGroupoid& G) {
  Json j;
  j["schema"] = 1;
  j["arrows"] = G.arrows.names();
  Json leq = Json::array();
  for (int a = 0; a < G.size(); ++a) {
    for (auto b = G.arrows.up(a).find_first(); b != Bitset::npos;
         b = G.arrows.up(a).find_next(b)) {
      if (static_cast<int>(b) != a) leq.push_back({a, static_cast<int>(b)});
    }
  }
  j["leq"] = std::move(leq);
  Json units = Json::array();
  for_each_bit(G.units, [&](int u) { units.push_back(u); });
  j["units"] = std::move(units);
  j["r"] = G.r;
  j["s"] = G.s;
  j["inv"] = G.inv;
  std::vector<std::array<int, 3>> mult;
  mult.reserve(G.mult_table.size());
  for (const auto& [key, p] : G.mult_table) {
    mult.push_back({static_cast<int>(key / G.size()),
                    static_cast<int>(key % G.size()), p});
  }
  std::sort(mult.begin(), mult.end());
  Json jm = Json::array();
  for (const auto& t : mult) jm.push_back({t[0], t[1], t[2]});
  j["mult"] = std::move(jm);
  return j;
}

FinTopGroupoid groupoid_from_json(const Json& j) {
  try {
    if (!j.is_object() || j.value("schema", 0) != 1) {
      throw ParseError("unsupported groupoid schema");
    }
    auto names = j.at("arrows").get<std::vector<std::string>>();
    const int n = static_cast<int>(names.size());
    std::vector<Bitset> up(n, Bitset(n));
    for (int a = 0; a < n; ++a) up[a].set(a);
    for (const auto& pair : j.at("leq")) {
      const int a = pair.at(0).get<int>();
      const int b = pair.at(1).get<int>();
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw ParseError("leq index out of range");
      }
      up[a].set(b);
    }
    FinTopGroupoid G;
    G.arrows = FinSpace(std::move(names), std::move(up));
    G.units = Bitset(n);
    for (const auto& u : j.at("units")) {
      const int ui = u.get<int>();
      if (ui < 0 || ui >= n) throw ParseError("unit index out of range");
      G.units.set(ui);
    }
    G.r = j.at("r").get<std::vector<int>>();
    G.s = j.at("s").get<std::vector<int>>();
    G.inv = j.at("inv").get<std::vector<int>>();
    if (static_cast<int>(G.r.size()) != n ||
        static_cast<int>(G.s.size()) != n ||
        static_cast<int>(G.inv.size()) != n) {
      throw ParseError("r/s/inv arrays must match the arrow count");
    }
    for (int a = 0; a < n; ++a) {
      if (G.r[a] < 0 || G.r[a] >= n || G.s[a] < 0 || G.s[a] >= n ||
          G.inv[a] < 0 || G.inv[a] >= n) {
        throw ParseError("r/s/inv index out of range");
      }
    }
    for (const auto& t : j.at("mult")) {
      const int g = t.at(0).get<int>();
      const int h = t.at(1).get<int>();
      const int p = t.at(2).get<int>();
      if (g < 0 || h < 0 || p < 0 || g >= n || h >= n || p >= n) {
        throw ParseError("mult index out of range");
      }
      G.mult_table[G.key(g, h)] = p;
    }
    CheckReport axioms = check_algebraic_axioms(G);
    if (!axioms.pass) {
      throw ParseError("not a groupoid: " + axioms.witness);
    }
    return G;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed groupoid JSON: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::vector<int> isotropy_indices(const FinTopGroupoid& G,
                                  const UniversalCover& C) {
  if (G.provenance != C.id) {
    throw MismatchedProvenance("groupoid was not built from this cover");
  }
  std::vector<int> out(G.size());
  for (int a = 0; a < G.size(); ++a) {
    const auto [p, q] = G.quotient_reps[a];
    out[a] = C.deck.mult(C.grp[p], C.deck.inverse(C.grp[q]));
  }
  return out;
}

std::string dot_export(const FinTopGroupoid& G,
                       const std::vector<int>& isotropy_index) {
  std::ostringstream out;
  out << "digraph groupoid {\n";
  for_each_bit(G.units, [&](int u) {
    out << "  \"" << G.arrows.name(u) << "\";\n";
  });
  for (int a = 0; a < G.size(); ++a) {
    const int k =
        isotropy_index.empty() ? 0 : isotropy_index[a];
    out << "  \"" << G.arrows.name(G.s[a]) << "\" -> \""
        << G.arrows.name(G.r[a]) << "\" [label=\"" << G.arrows.name(G.r[a])
        << u8"←" << G.arrows.name(G.s[a]) << " [" << k << "]\"];\n";
  }
  out << "}\n";
  return out.str();
}

Json to_json(const SpaceReport& r) {
  Json j;
  j["hausdorff"] = r.hausdorff;
  j["t0"] = r.t0;
  j["locally_compact"] = r.locally_compact;
  j["second_countable"] = r.second_countable;
  j["paracompact"] = r.paracompact;
  j["path_components"] = r.path_components;
  j["hypotheses_certificate"] = r.hypotheses_certificate;
  j["certificate_witness"] = r.certificate_witness;
  return j;
}

Json to_json(const CheckReport& r) {
  Json j;
  j["pass"] = r.pass;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.not_evaluated.empty()) j["not_evaluated"] = r.not_evaluated;
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

Json to_json(const SampleReport& r) {
  Json j;
  j["samples"] = r.samples;
  j["failures"] = r.failures;
  if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
  j["checks"] = r.checks;
  return j;
}

Json to_json(const DeckActionReport& r) {
  Json j;
  j["free"] = r.free;
  j["covering_space_action"] = r.covering_space_action;
  j["hausdorff_criterion"] = r.hausdorff_criterion;
  j["hausdorff_matches_base"] = r.hausdorff_matches_base;
  j["proper"] = r.proper;
  j["proper_justification"] = r.proper_justification;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

}  // namespace fgpd
