#pragma once

#include <string>
#include <vector>

#include "error.hpp"

namespace gcob {

// Element index into a fixed group; only meaningful relative to the group it
// came from. Identity is always element 0.
using ElementIndex = int;

// Permutation as an image list: a bijection on {0..m-1}.
using Perm = std::vector<int>;

bool is_valid_perm(const Perm& p);
Perm identity_perm(int npoints);
// (p*q)(x) = p[q[x]]  (apply q first)
Perm compose(const Perm& p, const Perm& q);

// Finite group backed by a dense multiplication table with precomputed
// inverses. Immutable after construction; all queries are reentrant.
class FiniteGroup {
 public:
  static constexpr int kDefaultClosureCap = 10000;

  // Validates a full multiplication table: Latin square, two-sided identity,
  // inverses, associativity (exhaustive up to order 128, sampled above).
  // The identity is relabeled to index 0 if necessary.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& rows,
                                std::string name = "");
  static FiniteGroup from_table_flat(std::vector<int> flat, int order,
                                     std::string name = "");

  // Closure of permutation generators under composition. Elements are
  // numbered in breadth-first discovery order from the identity, generators
  // applied in listed order, so the numbering is deterministic. If
  // gen_elements is non-null it receives each generator's element index.
  static FiniteGroup from_generators(const std::vector<Perm>& gens,
                                     std::string name = "",
                                     int cap = kDefaultClosureCap,
                                     std::vector<int>* gen_elements = nullptr);

  // Componentwise product; element (a,b) has index a*|H|+b.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                    std::string name = "",
                                    int cap = kDefaultClosureCap);

  int order() const { return order_; }
  const std::string& name() const { return name_; }

  ElementIndex mul(ElementIndex a, ElementIndex b) const {
    return mul_[static_cast<size_t>(a) * order_ + b];
  }
  ElementIndex inv(ElementIndex a) const { return inv_[a]; }

  // [k,g] = k g k^-1 g^-1 (the audited default convention).
  ElementIndex commutator(ElementIndex k, ElementIndex g) const {
    int x = mul(k, g);
    x = mul(x, inv_[k]);
    return mul(x, inv_[g]);
  }

  bool is_abelian() const { return abelian_; }
  int conjugacy_class_count() const;
  int element_order(ElementIndex x) const;

  // Same group with elements renamed by perm (new index = perm[old index]);
  // revalidated, so the identity ends up at 0 again.
  FiniteGroup relabeled(const Perm& perm, std::string name = "") const;

 private:
  FiniteGroup(int order, std::vector<int> table, std::string name);

  int order_;
  std::vector<int> mul_;  // order x order, row-major
  std::vector<int> inv_;
  bool abelian_;
  std::string name_;
};

}  // namespace gcob
