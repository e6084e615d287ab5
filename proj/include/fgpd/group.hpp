#pragma once

#include <vector>

#include "fgpd/errors.hpp"
#include "fgpd/presentation.hpp"

namespace fgpd {

/// A finite group given by its full multiplication table.  Element 0 is
/// the identity.  The group law, identity, inverses and (for small orders
/// exhaustively, otherwise by Light's test over the generators) the
/// associativity law are all verified at construction.
class FiniteGroupTable {
 public:
  FiniteGroupTable() : FiniteGroupTable(trivial()) {}

  FiniteGroupTable(std::vector<std::vector<int>> table,
                   std::vector<int> generator_images);

  static FiniteGroupTable trivial() { return FiniteGroupTable({{0}}, {}); }

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return 0; }
  int mult(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inv_[a]; }
  const std::vector<int>& generator_images() const { return gens_; }

  /// Evaluates a letter word (2g = generator g, 2g+1 = its inverse),
  /// multiplying left to right.
  int eval(const Word& word) const;

  bool is_abelian() const;

  /// |G / [G,G]|.
  int abelianization_order() const;

  /// Elements of the subgroup generated by the given elements.
  std::vector<int> subgroup_closure(std::vector<int> elements) const;

  bool satisfies(const Word& relator) const { return eval(relator) == 0; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  void validate() const;
};

}  // namespace fgpd
