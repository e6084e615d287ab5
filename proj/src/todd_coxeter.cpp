#include "fgpd/todd_coxeter.hpp"

#include <algorithm>
#include <deque>

namespace fgpd {

namespace {

struct CapReached {};

/// Coset table over columns = letters (2g, 2g+1), with union-find
/// coincidence bookkeeping.  Row 0 is the coset of the (trivial) subgroup.
class CosetTable {
 public:
  CosetTable(int ngens, std::size_t max_rows)
      : ncols_(2 * ngens), max_rows_(max_rows) {
    new_row();
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  bool live(int c) { return rep(c) == c; }

  int get(int c, int col) {
    int e = tab_[c][col];
    return e < 0 ? -1 : rep(e);
  }

  std::size_t rows() const { return tab_.size(); }

  void scan_and_fill(int c, const Word& w) {
    if (w.empty()) return;
    int i = 0;
    int j = static_cast<int>(w.size());
    int f = c;
    int b = c;
    while (true) {
      while (i < j && tab_[f][w[i]] >= 0) {
        f = rep(tab_[f][w[i]]);
        ++i;
      }
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && tab_[b][letter_inverse(w[j - 1])] >= 0) {
        b = rep(tab_[b][letter_inverse(w[j - 1])]);
        --j;
      }
      if (j == i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set(f, w[i], b);
        return;
      }
      int n = define(f, w[i]);
      f = n;
      ++i;
    }
  }

  void fill_row(int c) {
    for (int col = 0; col < ncols_; ++col) {
      if (!live(c)) return;
      if (tab_[c][col] < 0) define(c, col);
    }
  }

  /// Compact live rows into a normalized table, renumbered in creation
  /// order.  Throws on incomplete rows.
  std::vector<std::vector<int>> extract(std::vector<int>* live_ids) {
    std::vector<int> newid(tab_.size(), -1);
    live_ids->clear();
    for (std::size_t c = 0; c < tab_.size(); ++c) {
      if (live(static_cast<int>(c))) {
        newid[c] = static_cast<int>(live_ids->size());
        live_ids->push_back(static_cast<int>(c));
      }
    }
    std::vector<std::vector<int>> out(live_ids->size(),
                                      std::vector<int>(ncols_, -1));
    for (std::size_t i = 0; i < live_ids->size(); ++i) {
      for (int col = 0; col < ncols_; ++col) {
        int e = get((*live_ids)[i], col);
        if (e < 0) throw std::logic_error("coset table incomplete at extract");
        out[i][col] = newid[e];
      }
    }
    return out;
  }

  std::size_t allocated() const { return tab_.size(); }
  std::size_t live_count() {
    std::size_t n = 0;
    for (std::size_t c = 0; c < tab_.size(); ++c) {
      if (live(static_cast<int>(c))) ++n;
    }
    return n;
  }

 private:
  int ncols_;
  std::size_t max_rows_;
  std::vector<std::vector<int>> tab_;
  std::vector<int> parent_;
  std::deque<int> queue_;

  int new_row() {
    if (tab_.size() >= max_rows_) throw CapReached{};
    tab_.emplace_back(ncols_, -1);
    parent_.push_back(static_cast<int>(tab_.size()) - 1);
    return static_cast<int>(tab_.size()) - 1;
  }

  int define(int c, int col) {
    int n = new_row();
    tab_[c][col] = n;
    tab_[n][letter_inverse(col)] = c;
    return n;
  }

  void set(int a, int col, int b) {
    tab_[a][col] = b;
    tab_[b][letter_inverse(col)] = a;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue_.push_back(b);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!queue_.empty()) {
      int y = queue_.front();
      queue_.pop_front();
      for (int x = 0; x < ncols_; ++x) {
        int d = tab_[y][x];
        if (d < 0) continue;
        // dissolve the pair (y, x, d); the back pointer is removed only
        // while it still refers to the dying row
        if (tab_[d][letter_inverse(x)] == y) {
          tab_[d][letter_inverse(x)] = -1;
        }
        int mu = rep(y);
        int nu = rep(d);
        if (tab_[mu][x] >= 0) {
          merge(nu, tab_[mu][x]);
        } else if (tab_[nu][letter_inverse(x)] >= 0) {
          merge(mu, tab_[nu][letter_inverse(x)]);
        } else {
          tab_[mu][x] = nu;
          tab_[nu][letter_inverse(x)] = mu;
        }
      }
    }
  }
};

}  // namespace

std::optional<FiniteGroupTable> todd_coxeter(int ngens,
                                             const std::vector<Word>& relators,
                                             std::size_t max_cosets,
                                             ToddCoxeterStats* stats) {
  if (max_cosets < 1) throw Error("todd_coxeter: max_cosets must be >= 1");
  if (ngens == 0) {
    if (stats) {
      stats->cosets_defined = 1;
      stats->live = 1;
      stats->exceeded = false;
    }
    return FiniteGroupTable::trivial();
  }

  CosetTable table(ngens, max_cosets);
  try {
    for (std::size_t c = 0; c < table.rows(); ++c) {
      int ci = static_cast<int>(c);
      if (!table.live(ci)) continue;
      for (const Word& w : relators) {
        table.scan_and_fill(ci, w);
        if (!table.live(ci)) break;
      }
      if (!table.live(ci)) continue;
      table.fill_row(ci);
    }
  } catch (const CapReached&) {
    if (stats) {
      stats->cosets_defined = table.allocated();
      stats->live = table.live_count();
      stats->exceeded = true;
    }
    return std::nullopt;
  }

  std::vector<int> live_ids;
  auto norm = table.extract(&live_ids);
  const int n = static_cast<int>(norm.size());
  if (stats) {
    stats->cosets_defined = table.allocated();
    stats->live = static_cast<std::size_t>(n);
    stats->exceeded = false;
  }

  // words reaching each coset from 0, built breadth-first over columns
  std::vector<int> parent(n, -1), via(n, -1);
  std::vector<int> order;
  order.push_back(0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    int c = order[qi];
    for (int col = 0; col < 2 * ngens; ++col) {
      int d = norm[c][col];
      if (!seen[d]) {
        seen[d] = true;
        parent[d] = c;
        via[d] = col;
        order.push_back(d);
      }
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw std::logic_error("todd_coxeter: table not transitive");
  }

  std::vector<std::vector<int>> words(n);
  for (int c : order) {
    if (parent[c] >= 0) {
      words[c] = words[parent[c]];
      words[c].push_back(via[c]);
    }
  }

  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int h = 0; h < n; ++h) {
    for (int g = 0; g < n; ++g) {
      int acc = g;
      for (int col : words[h]) acc = norm[acc][col];
      mult[g][h] = acc;
    }
  }
  std::vector<int> gen_images(ngens);
  for (int g = 0; g < ngens; ++g) gen_images[g] = norm[0][2 * g];

  FiniteGroupTable group(std::move(mult), std::move(gen_images));
  for (const Word& w : relators) {
    if (!group.satisfies(w)) {
      throw std::logic_error("todd_coxeter: relator not satisfied by result");
    }
  }
  return group;
}

std::optional<FiniteGroupTable> todd_coxeter(const EdgePathPresentation& P,
                                             std::size_t max_cosets,
                                             ToddCoxeterStats* stats) {
  return todd_coxeter(P.generator_count(), P.relators, max_cosets, stats);
}

}  // namespace fgpd
