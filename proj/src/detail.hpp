#pragma once

#include <vector>

#include "fuzzideal/ring.hpp"

namespace fuzzideal::detail {

// Grow the additive subgroup `set` (whose elements are listed in `members`)
// to the subgroup generated by it and g, by adjoining the cosets H + kg.
inline void extend_subgroup(const Ring& ring, ElementSet& set, std::vector<Index>& members,
                            Index g) {
  const std::vector<Index> base = members;
  Index step = g;
  while (!set.contains(step)) {
    for (Index h : base) {
      Index y = ring.add(h, step);
      set.insert(y);
      members.push_back(y);
    }
    step = ring.add(step, g);
  }
}

}  // namespace fuzzideal::detail
