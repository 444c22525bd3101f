#pragma once

#include <cstdint>
#include <vector>

#include "group.hpp"

namespace gcob {

// A subgroup as a sorted element list plus the two classification flags the
// catalog comparisons need.
struct Subgroup {
  std::vector<ElementIndex> elements;
  bool is_cyclic = false;
  bool is_abelian = false;

  int size() const { return static_cast<int>(elements.size()); }
};

inline constexpr int kSubgroupOrderCap = 64;

// All distinct <g>, deduplicated.
std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g);

// Full lattice: cyclic subgroups closed under pairwise join, iterated to a
// fixpoint. Requires |G| <= order_cap (bitset representation).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g,
                                    int order_cap = kSubgroupOrderCap);

std::int64_t count_subgroups(const FiniteGroup& g,
                             int order_cap = kSubgroupOrderCap);
std::int64_t count_abelian_subgroups(const FiniteGroup& g,
                                     int order_cap = kSubgroupOrderCap);
std::int64_t count_cyclic_subgroups(const FiniteGroup& g);

// Com(G) = |{(g,k) : [k,g] = 1}|.
std::int64_t commuting_pairs_count(const FiniteGroup& g);

}  // namespace gcob
