#include "catalog.hpp"
#include "closed_forms.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "subgroups.hpp"

using namespace gcob;

TEST_CASE("cyclic subgroup counts") {
  CHECK(count_cyclic_subgroups(cyclic(12)) == 6);
  CHECK(count_cyclic_subgroups(dihedral(4)) == 7);   // n + tau(n)
  CHECK(count_cyclic_subgroups(dicyclic(3)) == 7);
}

TEST_CASE("full lattice counts") {
  CHECK(count_subgroups(dihedral(3)) == 6);   // order-6 symmetric group
  CHECK(count_subgroups(dihedral(5)) == 8);   // order 10
  CHECK(count_subgroups(cyclic(16)) == 5);    // tau(16)
}

TEST_CASE("lattice agrees with the subset-filter oracle on small groups") {
  for (const FiniteGroup& g :
       {dihedral(3), dihedral(4), dicyclic(2), cyclic(12), dicyclic(3),
        elementary_abelian(2, 3)}) {
    CAPTURE(g.name());
    CHECK(count_subgroups(g) == testing::oracle_subgroup_count(g));
  }
}

TEST_CASE("abelian subgroup counts") {
  CHECK(count_subgroups(dihedral(7)) == 10);
  CHECK(count_abelian_subgroups(dihedral(7)) == 9);
  FiniteGroup a4 = FiniteGroup::from_generators({{1, 2, 0, 3}, {1, 0, 3, 2}});
  CHECK(count_subgroups(a4) == 10);
  CHECK(count_abelian_subgroups(a4) == 9);
  CHECK(count_subgroups(elementary_abelian(2, 2)) == 5);
  CHECK(count_abelian_subgroups(elementary_abelian(2, 2)) == 5);
}

TEST_CASE("commuting pairs") {
  for (int n = 1; n <= 10; ++n)
    CHECK(commuting_pairs_count(cyclic(n)) == static_cast<std::int64_t>(n) * n);
  CHECK(commuting_pairs_count(dihedral(3)) == 18);  // 3 classes x 6
  CHECK(commuting_pairs_count(dihedral(4)) == 40);  // 5 classes x 8
}

TEST_CASE("lattice sanity: Lagrange, extremes, join closure") {
  for (const FiniteGroup& g :
       {dihedral(6), dicyclic(4), elementary_abelian(2, 4), cyclic(15)}) {
    CAPTURE(g.name());
    auto subs = all_subgroups(g);
    bool trivial_seen = false, full_seen = false;
    for (const auto& s : subs) {
      CHECK(g.order() % s.size() == 0);
      trivial_seen |= s.size() == 1;
      full_seen |= s.size() == g.order();
    }
    CHECK(trivial_seen);
    CHECK(full_seen);
    // joins of enumerated subgroups are enumerated: regenerate and compare
    std::set<std::vector<int>> keys;
    for (const auto& s : subs) keys.insert(s.elements);
    for (size_t i = 0; i < subs.size(); ++i) {
      for (size_t j = i + 1; j < subs.size(); ++j) {
        std::set<int> seed(subs[i].elements.begin(), subs[i].elements.end());
        seed.insert(subs[j].elements.begin(), subs[j].elements.end());
        // close the union by repeated products
        std::vector<int> elems(seed.begin(), seed.end());
        std::set<int> have(seed.begin(), seed.end());
        for (size_t a = 0; a < elems.size(); ++a)
          for (size_t b = 0; b < elems.size(); ++b) {
            int p = g.mul(elems[a], elems[b]);
            if (have.insert(p).second) elems.push_back(p);
          }
        std::sort(elems.begin(), elems.end());
        CHECK(keys.count(elems) == 1);
      }
    }
  }
}

TEST_CASE("subgroup flags") {
  auto subs = all_subgroups(dihedral(4));
  int cyclic_count = 0, abelian_count = 0;
  for (const auto& s : subs) {
    if (s.is_cyclic) ++cyclic_count;
    if (s.is_abelian) ++abelian_count;
    if (s.is_cyclic) CHECK(s.is_abelian);
  }
  CHECK(cyclic_count == 7);
  CHECK(abelian_count == 9);
}

TEST_CASE("family formulas over a range") {
  for (int n = 1; n <= 12; ++n)
    CHECK(count_subgroups(dihedral(n)) == tau(n) + sigma(n));
  for (int n = 1; n <= 6; ++n)
    CHECK(count_subgroups(dicyclic(n)) == tau(2 * n) + sigma(n));
}

TEST_CASE("order cap is a loud error") {
  CHECK_THROWS_AS(count_subgroups(cyclic(65)), OrderCapError);
}
