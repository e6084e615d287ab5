#pragma once

#include <cstddef>
#include <optional>

#include "fgpd/group.hpp"
#include "fgpd/presentation.hpp"

namespace fgpd {

struct ToddCoxeterStats {
  std::size_t cosets_defined = 0;  // rows ever allocated
  std::size_t live = 0;            // surviving cosets (= group order on success)
  bool exceeded = false;
};

/// Coset enumeration over the trivial subgroup, HLT strategy with
/// systematic relator scanning, row filling, and immediate coincidence
/// processing.  Deterministic: identical inputs give identical tables.
/// Returns std::nullopt when more than `max_cosets` rows would be needed —
/// the group may be infinite or the cap too small; retry with a larger cap
/// to distinguish.
std::optional<FiniteGroupTable> todd_coxeter(int ngens,
                                             const std::vector<Word>& relators,
                                             std::size_t max_cosets,
                                             ToddCoxeterStats* stats = nullptr);

std::optional<FiniteGroupTable> todd_coxeter(const EdgePathPresentation& P,
                                             std::size_t max_cosets,
                                             ToddCoxeterStats* stats = nullptr);

}  // namespace fgpd
