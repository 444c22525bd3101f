#include "subgroups.hpp"

#include <algorithm>
#include <set>

namespace gcob {

namespace {

using Mask = std::uint64_t;

// Closes seed under multiplication; |G| <= 64 so one word suffices.
Mask close_mask(const FiniteGroup& g, Mask seed) {
  std::vector<int> elems;
  for (int x = 0; x < g.order(); ++x)
    if (seed >> x & 1) elems.push_back(x);
  Mask mask = seed | 1;  // identity always in
  if (!(seed & 1)) elems.push_back(0);
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j < elems.size(); ++j) {
      int p = g.mul(elems[i], elems[j]);
      if (!(mask >> p & 1)) {
        mask |= Mask(1) << p;
        elems.push_back(p);
      }
    }
  }
  return mask;
}

Subgroup subgroup_from_mask(const FiniteGroup& g, Mask mask) {
  Subgroup s;
  for (int x = 0; x < g.order(); ++x)
    if (mask >> x & 1) s.elements.push_back(x);
  s.is_abelian = true;
  for (size_t i = 0; i < s.elements.size() && s.is_abelian; ++i)
    for (size_t j = i + 1; j < s.elements.size(); ++j)
      if (g.mul(s.elements[i], s.elements[j]) !=
          g.mul(s.elements[j], s.elements[i])) {
        s.is_abelian = false;
        break;
      }
  s.is_cyclic = false;
  for (int x : s.elements)
    if (g.element_order(x) == s.size()) {
      s.is_cyclic = true;
      break;
    }
  return s;
}

std::set<Mask> cyclic_masks(const FiniteGroup& g) {
  std::set<Mask> out;
  for (int x = 0; x < g.order(); ++x) {
    Mask m = 1;  // identity
    for (int y = x; y != 0; y = g.mul(y, x)) m |= Mask(1) << y;
    out.insert(m);
  }
  return out;
}

}  // namespace

std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g) {
  if (g.order() > kSubgroupOrderCap)
    throw OrderCapError("cyclic_subgroups: order " + std::to_string(g.order()) +
                        " exceeds cap " + std::to_string(kSubgroupOrderCap));
  std::vector<Subgroup> out;
  for (Mask m : cyclic_masks(g)) out.push_back(subgroup_from_mask(g, m));
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int order_cap) {
  if (g.order() > order_cap || g.order() > kSubgroupOrderCap)
    throw OrderCapError("all_subgroups: order " + std::to_string(g.order()) +
                        " exceeds cap " + std::to_string(order_cap));
  std::set<Mask> subs = cyclic_masks(g);
  // Join closure to fixpoint; joins of already-present pairs only.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(subs.begin(), subs.end());
    for (size_t i = 0; i < cur.size(); ++i) {
      for (size_t j = i + 1; j < cur.size(); ++j) {
        Mask u = cur[i] | cur[j];
        if (u == cur[i] || u == cur[j]) continue;  // nested, join is the bigger
        Mask joined = close_mask(g, u);
        if (subs.insert(joined).second) grew = true;
      }
    }
  }
  std::vector<Subgroup> out;
  out.reserve(subs.size());
  for (Mask m : subs) {
    Subgroup s = subgroup_from_mask(g, m);
    if (g.order() % s.size() != 0)
      throw Error(ErrorCode::not_a_group,
                  "Lagrange violation in subgroup enumeration");
    out.push_back(std::move(s));
  }
  return out;
}

std::int64_t count_subgroups(const FiniteGroup& g, int order_cap) {
  return static_cast<std::int64_t>(all_subgroups(g, order_cap).size());
}

std::int64_t count_abelian_subgroups(const FiniteGroup& g, int order_cap) {
  std::int64_t n = 0;
  for (const Subgroup& s : all_subgroups(g, order_cap))
    if (s.is_abelian) ++n;
  return n;
}

std::int64_t count_cyclic_subgroups(const FiniteGroup& g) {
  return static_cast<std::int64_t>(cyclic_subgroups(g).size());
}

std::int64_t commuting_pairs_count(const FiniteGroup& g) {
  std::int64_t n = 0;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (g.mul(a, b) == g.mul(b, a)) ++n;
  return n;
}

}  // namespace gcob
