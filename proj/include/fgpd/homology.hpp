#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "fgpd/simplicial.hpp"

namespace fgpd {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Diagonal of the Smith normal form of M, nonzero entries first, each
/// dividing the next.  M is consumed by value.
std::vector<BigInt> smith_diagonal(IntMatrix M);

struct H1Summary {
  int betti = 0;                  // free rank
  std::vector<BigInt> torsion;    // invariant factors > 1, divisibility chain

  bool finite() const { return betti == 0; }

  /// |H1| when finite (product of the torsion factors).
  BigInt order() const {
    BigInt o = 1;
    for (const auto& t : torsion) o *= t;
    return o;
  }
};

/// First integral homology of a complex, from the Smith normal forms of
/// its boundary matrices.  Independent of any group-theoretic machinery.
H1Summary h1_of_complex(const SimplicialComplex& K);

}  // namespace fgpd
