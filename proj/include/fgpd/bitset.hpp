#pragma once

#include <boost/dynamic_bitset.hpp>

namespace fgpd {

using Bitset = boost::dynamic_bitset<>;

/// Calls fn(i) for every set bit of b, in increasing order.
template <typename Fn>
void for_each_bit(const Bitset& b, Fn&& fn) {
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) {
    fn(static_cast<int>(i));
  }
}

inline Bitset singleton(std::size_t n, std::size_t i) {
  Bitset b(n);
  b.set(i);
  return b;
}

}  // namespace fgpd
