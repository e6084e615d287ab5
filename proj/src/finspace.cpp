#include "fgpd/finspace.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace fgpd {

namespace {

bool antisymmetric(const std::vector<Bitset>& up) {
  for (std::size_t i = 0; i < up.size(); ++i) {
    for (auto j = up[i].find_first(); j != Bitset::npos;
         j = up[i].find_next(j)) {
      if (j != i && up[j].test(i)) return false;
    }
  }
  return true;
}

}  // namespace

FinSpace::FinSpace(std::vector<std::string> names, std::vector<Bitset> up,
                   bool require_t0)
    : names_(std::move(names)), up_(std::move(up)) {
  if (names_.size() != up_.size()) {
    throw Error("FinSpace: names/up size mismatch");
  }
  for (int i = 0; i < size(); ++i) {
    if (up_[i].size() != names_.size()) {
      throw Error("FinSpace: up-set bitset of wrong width");
    }
    if (!up_[i].test(i)) throw Error("FinSpace: leq not reflexive");
  }
  for (int i = 0; i < size(); ++i) {
    for (auto j = up_[i].find_first(); j != Bitset::npos;
         j = up_[i].find_next(j)) {
      if (!up_[j].is_subset_of(up_[i])) {
        throw Error("FinSpace: leq not transitive");
      }
    }
  }
  t0_ = antisymmetric(up_);
  if (require_t0 && !t0_) {
    throw CycleWithT0Flag("antisymmetry requested but leq has a cycle");
  }
  for (int i = 0; i < size(); ++i) {
    if (!index_.emplace(names_[i], i).second) {
      throw Error("FinSpace: duplicate point name '" + names_[i] + "'");
    }
  }
}

int FinSpace::index(const std::string& point) const {
  auto it = index_.find(point);
  if (it == index_.end()) throw UnknownPoint("unknown point '" + point + "'");
  return it->second;
}

bool FinSpace::has_point(const std::string& point) const {
  return index_.find(point) != index_.end();
}

Bitset FinSpace::down(int i) const {
  Bitset d(names_.size());
  for (int j = 0; j < size(); ++j) {
    if (up_[j].test(i)) d.set(j);
  }
  return d;
}

OpenSet::OpenSet(SpacePtr s, Bitset m) : space(std::move(s)), members(std::move(m)) {
  if (!is_open(*space, members)) throw Error("OpenSet: member set is not an up-set");
}

SpaceMap identity_map(SpacePtr X) {
  std::vector<int> a(X->size());
  for (int i = 0; i < X->size(); ++i) a[i] = i;
  return SpaceMap{X, X, std::move(a)};
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (f.cod.get() != g.dom.get() && !(*f.cod == *g.dom)) {
    throw Error("compose: codomain/domain mismatch");
  }
  std::vector<int> a(f.assignment.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = g.assignment[f.assignment[i]];
  return SpaceMap{f.dom, g.cod, std::move(a)};
}

FinSpace from_relations(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const std::vector<std::string>& isolated, bool require_t0) {
  std::set<std::string> name_set(isolated.begin(), isolated.end());
  for (const auto& [a, b] : pairs) {
    name_set.insert(a);
    name_set.insert(b);
  }
  std::vector<std::string> names(name_set.begin(), name_set.end());
  const int n = static_cast<int>(names.size());
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < n; ++i) idx[names[i]] = i;

  std::vector<Bitset> up(n, Bitset(n));
  for (int i = 0; i < n; ++i) up[i].set(i);
  for (const auto& [a, b] : pairs) up[idx[a]].set(idx[b]);

  // reflexive-transitive closure, iterated to a fixpoint
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      Bitset acc = up[i];
      for (auto j = up[i].find_first(); j != Bitset::npos;
           j = up[i].find_next(j)) {
        acc |= up[j];
      }
      if (acc != up[i]) {
        up[i] = std::move(acc);
        changed = true;
      }
    }
  }
  return FinSpace(std::move(names), std::move(up), require_t0);
}

bool is_open(const FinSpace& X, const Bitset& S) {
  for (auto i = S.find_first(); i != Bitset::npos; i = S.find_next(i)) {
    if (!X.up(static_cast<int>(i)).is_subset_of(S)) return false;
  }
  return true;
}

OpenSet minimal_open(SpacePtr X, const std::string& point) {
  return OpenSet(X, X->up(X->index(point)));
}

bool is_continuous(const SpaceMap& f) {
  const FinSpace& X = *f.dom;
  const FinSpace& Y = *f.cod;
  bool order_preserving = true;
  for (int i = 0; i < X.size() && order_preserving; ++i) {
    for (auto j = X.up(i).find_first(); j != Bitset::npos;
         j = X.up(i).find_next(j)) {
      if (!Y.leq(f(i), f(static_cast<int>(j)))) {
        order_preserving = false;
        break;
      }
    }
  }
  // Independent route: preimage of every minimal open must be open.
  bool preimages_open = true;
  for (int y = 0; y < Y.size() && preimages_open; ++y) {
    Bitset pre(X.size());
    for (int i = 0; i < X.size(); ++i) {
      if (Y.up(y).test(f(i))) pre.set(i);
    }
    if (!is_open(X, pre)) preimages_open = false;
  }
  if (order_preserving != preimages_open) {
    throw std::logic_error("is_continuous: criteria disagree");
  }
  return order_preserving;
}

bool is_open_map(const SpaceMap& f) {
  const FinSpace& X = *f.dom;
  const FinSpace& Y = *f.cod;
  for (int i = 0; i < X.size(); ++i) {
    Bitset image(Y.size());
    for (auto j = X.up(i).find_first(); j != Bitset::npos;
         j = X.up(i).find_next(j)) {
      image.set(f(static_cast<int>(j)));
    }
    if (!is_open(Y, image)) return false;
  }
  return true;
}

FinSpace product_space(const FinSpace& A, const FinSpace& B) {
  const int na = A.size();
  const int nb = B.size();
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(na) * nb);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      names.push_back("(" + A.name(i) + "," + B.name(j) + ")");
    }
  }
  std::vector<Bitset> up(names.size(), Bitset(names.size()));
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      Bitset& u = up[static_cast<std::size_t>(i) * nb + j];
      for (auto i2 = A.up(i).find_first(); i2 != Bitset::npos;
           i2 = A.up(i).find_next(i2)) {
        for (auto j2 = B.up(j).find_first(); j2 != Bitset::npos;
             j2 = B.up(j).find_next(j2)) {
          u.set(i2 * nb + j2);
        }
      }
    }
  }
  return FinSpace(std::move(names), std::move(up));
}

QuotientResult quotient_space(SpacePtr X,
                              const std::vector<std::vector<int>>& partition) {
  const int n = X->size();
  std::vector<int> cls(n, -1);
  for (std::size_t c = 0; c < partition.size(); ++c) {
    if (partition[c].empty()) throw BadPartition("empty class");
    for (int p : partition[c]) {
      if (p < 0 || p >= n) throw BadPartition("point index out of range");
      if (cls[p] != -1) throw BadPartition("point in two classes");
      cls[p] = static_cast<int>(c);
    }
  }
  for (int p = 0; p < n; ++p) {
    if (cls[p] == -1) throw BadPartition("partition does not cover the space");
  }
  const int k = static_cast<int>(partition.size());

  // Minimal open class-set of a class: smallest collection of classes,
  // containing it, whose preimage is an up-set.
  std::vector<Bitset> class_up(k, Bitset(k));
  for (int c = 0; c < k; ++c) {
    Bitset classes(k);
    classes.set(c);
    bool grew = true;
    while (grew) {
      grew = false;
      Bitset closure(n);
      for (auto d = classes.find_first(); d != Bitset::npos;
           d = classes.find_next(d)) {
        for (int p : partition[d]) closure |= X->up(p);
      }
      for (auto p = closure.find_first(); p != Bitset::npos;
           p = closure.find_next(p)) {
        if (!classes.test(cls[p])) {
          classes.set(cls[p]);
          grew = true;
        }
      }
    }
    class_up[c] = std::move(classes);
  }

  std::vector<std::string> names(k);
  for (int c = 0; c < k; ++c) {
    std::vector<std::string> members;
    for (int p : partition[c]) members.push_back(X->name(p));
    std::sort(members.begin(), members.end());
    std::string nm = members[0];
    for (std::size_t i = 1; i < members.size(); ++i) nm += "+" + members[i];
    names[c] = nm;
  }

  QuotientResult res;
  res.quotient = std::make_shared<FinSpace>(std::move(names), std::move(class_up));
  std::vector<int> assignment(cls.begin(), cls.end());
  res.projection = SpaceMap{X, res.quotient, std::move(assignment)};
  assert(is_continuous(res.projection));

  res.projection_open = is_open_map(res.projection);

  // The relation is closed iff it is down-closed in the product order.
  res.relation_closed = true;
  for (int x = 0; x < n && res.relation_closed; ++x) {
    Bitset dx = X->down(x);
    for (int y : partition[cls[x]]) {
      Bitset dy = X->down(y);
      for (auto x2 = dx.find_first();
           x2 != Bitset::npos && res.relation_closed; x2 = dx.find_next(x2)) {
        for (auto y2 = dy.find_first(); y2 != Bitset::npos;
             y2 = dy.find_next(y2)) {
          if (cls[x2] != cls[y2]) {
            res.relation_closed = false;
            break;
          }
        }
      }
    }
  }

  res.quotient_hausdorff = space_report(*res.quotient).hausdorff;
  if (res.projection_open) {
    res.biconditional_applies = true;
    res.biconditional_holds = (res.relation_closed == res.quotient_hausdorff);
  }
  return res;
}

QuotientResult quotient_space(
    SpacePtr X, const std::vector<std::vector<std::string>>& partition) {
  std::vector<std::vector<int>> idx;
  idx.reserve(partition.size());
  for (const auto& c : partition) {
    std::vector<int> v;
    v.reserve(c.size());
    for (const auto& nm : c) v.push_back(X->index(nm));
    idx.push_back(std::move(v));
  }
  return quotient_space(std::move(X), idx);
}

SpaceReport space_report(const FinSpace& X) {
  SpaceReport r;
  r.t0 = X.t0();
  const int n = X.size();

  r.hausdorff = true;
  for (int i = 0; i < n && r.hausdorff; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (X.up(i).intersects(X.up(j))) {
        r.hausdorff = false;
        break;
      }
    }
  }

  // locally compact (compact = quasicompact + Hausdorff): a neighbourhood
  // of x contains its minimal open, and a finite subspace is Hausdorff iff
  // it is an antichain; so x qualifies iff its minimal open is an
  // antichain, which forces it to be the singleton {x}.
  r.locally_compact = true;
  for (int i = 0; i < n; ++i) {
    bool antichain = true;
    for (auto a = X.up(i).find_first(); a != Bitset::npos && antichain;
         a = X.up(i).find_next(a)) {
      for (auto b = X.up(i).find_next(a); b != Bitset::npos;
           b = X.up(i).find_next(b)) {
        if (X.leq(a, b) || X.leq(b, a)) {
          antichain = false;
          break;
        }
      }
    }
    if (!antichain) {
      r.locally_compact = false;
      break;
    }
  }

  r.second_countable = true;
  r.paracompact = r.hausdorff;
  r.path_components = static_cast<int>(components(X).size());

  // The standing hypotheses hold for every finite space: the minimal open
  // of x is a cone with apex x (x leq everything in it), hence path
  // connected and contractible, hence relatively inessential.  The scan
  // below re-derives the cone property rather than assuming it.
  r.hypotheses_certificate = true;
  for (int i = 0; i < n && r.hypotheses_certificate; ++i) {
    bool apex = true;
    for (auto j = X.up(i).find_first(); j != Bitset::npos;
         j = X.up(i).find_next(j)) {
      if (!X.leq(i, j)) {
        apex = false;
        break;
      }
    }
    if (!apex) r.hypotheses_certificate = false;
  }
  r.certificate_witness =
      "every minimal open is a cone over its defining point, hence "
      "contractible: it is a path connected relatively inessential "
      "neighbourhood";
  return r;
}

std::vector<Bitset> components(const FinSpace& X) {
  const int n = X.size();
  std::vector<int> comp(n, -1);
  std::vector<Bitset> out;
  for (int i = 0; i < n; ++i) {
    if (comp[i] != -1) continue;
    Bitset c(n);
    std::vector<int> stack{i};
    comp[i] = static_cast<int>(out.size());
    c.set(i);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y) {
        if (comp[y] == -1 && (X.leq(x, y) || X.leq(y, x))) {
          comp[y] = comp[i];
          c.set(y);
          stack.push_back(y);
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

Subspace subspace(const FinSpace& X, const Bitset& points) {
  std::vector<int> to_parent;
  std::vector<int> to_sub(X.size(), -1);
  for (auto i = points.find_first(); i != Bitset::npos;
       i = points.find_next(i)) {
    to_sub[i] = static_cast<int>(to_parent.size());
    to_parent.push_back(static_cast<int>(i));
  }
  const int m = static_cast<int>(to_parent.size());
  std::vector<std::string> names(m);
  std::vector<Bitset> up(m, Bitset(m));
  for (int i = 0; i < m; ++i) {
    names[i] = X.name(to_parent[i]);
    for (int j = 0; j < m; ++j) {
      if (X.leq(to_parent[i], to_parent[j])) up[i].set(j);
    }
  }
  return Subspace{FinSpace(std::move(names), std::move(up)),
                  std::move(to_parent)};
}

}  // namespace fgpd
