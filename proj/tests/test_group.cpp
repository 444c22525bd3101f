#include <random>

#include "doctest.h"
#include "group.hpp"
#include "oracles.hpp"

using namespace gcob;

namespace {

std::vector<std::vector<int>> mod_add_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

}  // namespace

TEST_CASE("from_table accepts the trivial group") {
  FiniteGroup g = FiniteGroup::from_table({{0}}, "triv");
  CHECK(g.order() == 1);
  CHECK(g.is_abelian());
  CHECK(g.inv(0) == 0);
}

TEST_CASE("from_table accepts mod-4 addition") {
  FiniteGroup g = FiniteGroup::from_table(mod_add_table(4));
  CHECK(g.order() == 4);
  CHECK(g.is_abelian());
  CHECK(g.mul(1, 3) == 0);
  CHECK(g.inv(1) == 3);
  CHECK(g.element_order(1) == 4);
  CHECK(g.element_order(2) == 2);
}

TEST_CASE("from_table rejects a non-bijective row") {
  auto t = mod_add_table(3);
  t[1][2] = 1;  // row 1 now has 1 twice
  CHECK_THROWS_AS(FiniteGroup::from_table(t), NotAGroupError);
}

TEST_CASE("from_table rejects a table without identity") {
  // subtraction mod 3: Latin but 0 is only a right identity (and the
  // operation is not associative, either failure is a valid rejection)
  std::vector<std::vector<int>> t(3, std::vector<int>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = ((i - j) % 3 + 3) % 3;
  CHECK_THROWS_AS(FiniteGroup::from_table(t, "sub3"), NotAGroupError);
}

TEST_CASE("from_table rejects a non-associative loop and names a triple") {
  // order-5 loop: identity plus a Latin square that cannot be a group
  // (element 1 squares to 0, impossible in the only order-5 group)
  std::vector<std::vector<int>> t = {{0, 1, 2, 3, 4},
                                     {1, 0, 3, 4, 2},
                                     {2, 3, 4, 1, 0},
                                     {3, 4, 0, 2, 1},
                                     {4, 2, 1, 0, 3}};
  try {
    FiniteGroup::from_table(t, "loop5");
    FAIL("expected NotAGroupError");
  } catch (const NotAGroupError& e) {
    CHECK(std::string(e.what()).find("associativity") != std::string::npos);
    CHECK(std::string(e.what()).find("(") != std::string::npos);
  }
}

TEST_CASE("from_table relabels the identity to index 0") {
  // shift mod-3 addition so that the identity sits at index 1
  std::vector<std::vector<int>> t(3, std::vector<int>(3));
  auto relab = [](int x) { return x == 0 ? 1 : (x == 1 ? 0 : x); };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t[relab(i)][relab(j)] = relab((i + j) % 3);
  FiniteGroup g = FiniteGroup::from_table(t);
  for (int x = 0; x < 3; ++x) {
    CHECK(g.mul(0, x) == x);
    CHECK(g.mul(x, 0) == x);
  }
}

TEST_CASE("from_generators: single 4-cycle generates the order-4 cyclic group") {
  FiniteGroup g = FiniteGroup::from_generators({{1, 2, 3, 0}});
  CHECK(g.order() == 4);
  CHECK(g.is_abelian());
}

TEST_CASE("from_generators closure matches the fixpoint oracle") {
  std::vector<Perm> gens = {{1, 2, 3, 0}, {0, 3, 2, 1}};  // rotation+reflection
  FiniteGroup g = FiniteGroup::from_generators(gens, "d8");
  CHECK(g.order() == 8);
  CHECK(g.order() == static_cast<int>(testing::oracle_closure_size(gens, 4)));
  CHECK_FALSE(g.is_abelian());
}

TEST_CASE("from_generators: no generators give the trivial group") {
  FiniteGroup g = FiniteGroup::from_generators({});
  CHECK(g.order() == 1);
}

TEST_CASE("from_generators enforces the closure cap") {
  // full symmetric group on 8 points has order 40320 > default cap
  Perm cyc8 = {1, 2, 3, 4, 5, 6, 7, 0};
  Perm swap01 = {1, 0, 2, 3, 4, 5, 6, 7};
  CHECK_THROWS_AS(FiniteGroup::from_generators({cyc8, swap01}),
                  ClosureCapError);
}

TEST_CASE("from_generators numbering is deterministic") {
  std::vector<Perm> gens = {{1, 2, 0, 4, 3}, {0, 2, 1, 3, 4}};
  FiniteGroup a = FiniteGroup::from_generators(gens);
  FiniteGroup b = FiniteGroup::from_generators(gens);
  REQUIRE(a.order() == b.order());
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y) CHECK(a.mul(x, y) == b.mul(x, y));
}

TEST_CASE("identity law on random elements") {
  std::mt19937 rng(7);
  for (int n : {1, 2, 5, 12}) {
    FiniteGroup g = FiniteGroup::from_table(mod_add_table(n));
    std::uniform_int_distribution<int> d(0, n - 1);
    for (int t = 0; t < 20; ++t) {
      int x = d(rng);
      CHECK(g.mul(0, x) == x);
      CHECK(g.mul(x, 0) == x);
      CHECK(g.mul(x, g.inv(x)) == 0);
    }
  }
}

TEST_CASE("commutator basics") {
  FiniteGroup s3 =
      FiniteGroup::from_generators({{1, 2, 0}, {1, 0, 2}}, "sym3");
  // commuting elements have trivial commutator; every [g,g] is trivial
  for (int x = 0; x < s3.order(); ++x) CHECK(s3.commutator(x, x) == 0);
  // two distinct transpositions have a 3-cycle commutator
  std::vector<int> transpositions;
  for (int x = 1; x < s3.order(); ++x)
    if (s3.element_order(x) == 2) transpositions.push_back(x);
  REQUIRE(transpositions.size() == 3);
  int c = s3.commutator(transpositions[0], transpositions[1]);
  CHECK(s3.element_order(c) == 3);
}

TEST_CASE("direct product: order, indexing, classification") {
  FiniteGroup z2 = FiniteGroup::from_table(mod_add_table(2));
  FiniteGroup z3 = FiniteGroup::from_table(mod_add_table(3));
  FiniteGroup z2z2 = FiniteGroup::direct_product(z2, z2);
  CHECK(z2z2.order() == 4);
  int involutions = 0;
  for (int x = 1; x < 4; ++x)
    if (z2z2.element_order(x) == 2) ++involutions;
  CHECK(involutions == 3);

  FiniteGroup z6 = FiniteGroup::direct_product(z2, z3);
  bool has_order6 = false;
  for (int x = 0; x < 6; ++x) has_order6 |= z6.element_order(x) == 6;
  CHECK(has_order6);  // coprime orders give a cyclic product

  // element (a,b) sits at index a*|H|+b
  FiniteGroup d8 = FiniteGroup::from_generators({{1, 2, 3, 0}, {0, 3, 2, 1}});
  FiniteGroup big = FiniteGroup::direct_product(d8, z3);
  CHECK(big.order() == 24);
  CHECK_FALSE(big.is_abelian());
  for (int a1 = 0; a1 < 8; ++a1)
    for (int b1 = 0; b1 < 3; ++b1)
      CHECK(big.mul(a1 * 3 + b1, 0 * 3 + 0) == a1 * 3 + b1);
}

TEST_CASE("conjugacy class counts") {
  FiniteGroup z12 = FiniteGroup::from_table(mod_add_table(12));
  CHECK(z12.conjugacy_class_count() == 12);
  FiniteGroup s3 = FiniteGroup::from_generators({{1, 2, 0}, {1, 0, 2}});
  CHECK(s3.conjugacy_class_count() == 3);
  FiniteGroup d8 = FiniteGroup::from_generators({{1, 2, 3, 0}, {0, 3, 2, 1}});
  CHECK(d8.conjugacy_class_count() == 5);
}

TEST_CASE("is_abelian") {
  CHECK(FiniteGroup::from_table(mod_add_table(12)).is_abelian());
  CHECK(FiniteGroup::from_table({{0}}).is_abelian());
  CHECK_FALSE(
      FiniteGroup::from_generators({{1, 2, 3, 0}, {0, 3, 2, 1}}).is_abelian());
}

TEST_CASE("relabeled groups stay valid") {
  FiniteGroup d8 = FiniteGroup::from_generators({{1, 2, 3, 0}, {0, 3, 2, 1}});
  std::mt19937 rng(3);
  Perm p = identity_perm(8);
  std::shuffle(p.begin(), p.end(), rng);
  FiniteGroup r = d8.relabeled(p);
  CHECK(r.order() == 8);
  CHECK(r.conjugacy_class_count() == 5);
  CHECK_FALSE(r.is_abelian());
}
