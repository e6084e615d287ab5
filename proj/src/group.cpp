#include "fgpd/group.hpp"

#include <algorithm>
#include <set>

namespace fgpd {

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<int>> table,
                                   std::vector<int> generator_images)
    : table_(std::move(table)), gens_(std::move(generator_images)) {
  const int n = order();
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == 0) {
        inv_[a] = b;
        break;
      }
    }
  }
  validate();
}

void FiniteGroupTable::validate() const {
  const int n = order();
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table_[a].size()) != n) {
      throw Error("group table: ragged row");
    }
    if (table_[0][a] != a || table_[a][0] != a) {
      throw Error("group table: element 0 is not an identity");
    }
    if (inv_[a] < 0 || table_[a][inv_[a]] != 0 || table_[inv_[a]][a] != 0) {
      throw Error("group table: missing two-sided inverse");
    }
  }
  if (n <= 128) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
            throw Error("group table: associativity fails");
          }
        }
      }
    }
  } else {
    // Light's test: associativity over a generating set suffices.
    std::vector<int> gset = gens_;
    if (gset.empty()) throw Error("group table: no generators for large table");
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int g : gset) {
          if (table_[table_[a][b]][g] != table_[a][table_[b][g]]) {
            throw Error("group table: associativity fails");
          }
        }
      }
    }
    // and the generators must actually generate
    if (static_cast<int>(subgroup_closure(gens_).size()) != n) {
      throw Error("group table: generators do not generate");
    }
  }
}

int FiniteGroupTable::eval(const Word& word) const {
  int acc = 0;
  for (int letter : word) {
    int g = gens_.at(letter / 2);
    acc = mult(acc, (letter & 1) ? inverse(g) : g);
  }
  return acc;
}

bool FiniteGroupTable::is_abelian() const {
  const int n = order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (table_[a][b] != table_[b][a]) return false;
    }
  }
  return true;
}

std::vector<int> FiniteGroupTable::subgroup_closure(
    std::vector<int> elements) const {
  std::set<int> closure{0};
  for (int e : elements) closure.insert(e);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(closure.begin(), closure.end());
    for (int a : cur) {
      if (closure.insert(inverse(a)).second) grew = true;
      for (int b : cur) {
        if (closure.insert(mult(a, b)).second) grew = true;
      }
    }
  }
  return {closure.begin(), closure.end()};
}

int FiniteGroupTable::abelianization_order() const {
  std::vector<int> comms;
  const int n = order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      comms.push_back(mult(mult(inverse(a), inverse(b)), mult(a, b)));
    }
  }
  const auto derived = subgroup_closure(comms);
  return n / static_cast<int>(derived.size());
}

}  // namespace fgpd
