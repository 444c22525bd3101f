// Exercises the shared-library surface only: gcob.h, opaque handles, status
// codes. No internal headers.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "gcob.h"

namespace {

struct Group {
  gcob_group* g = nullptr;
  ~Group() { gcob_group_free(g); }
};

struct Cat {
  gcob_catalog* c = nullptr;
  ~Cat() { gcob_catalog_free(c); }
};

}  // namespace

TEST_CASE("family constructors and element ops") {
  Group z4;
  REQUIRE(gcob_group_cyclic(4, &z4.g) == GCOB_OK);
  CHECK(gcob_group_order(z4.g) == 4);
  CHECK(gcob_group_mul(z4.g, 1, 3) == 0);
  CHECK(gcob_group_inv(z4.g, 1) == 3);
  CHECK(gcob_group_is_abelian(z4.g) == 1);
  CHECK(gcob_group_element_order(z4.g, 1) == 4);

  Group d8;
  REQUIRE(gcob_group_dihedral(4, &d8.g) == GCOB_OK);
  CHECK(gcob_group_order(d8.g) == 8);
  CHECK(gcob_group_conjugacy_class_count(d8.g) == 5);

  Group q8;
  REQUIRE(gcob_group_dicyclic(2, &q8.g) == GCOB_OK);
  CHECK(gcob_group_order(q8.g) == 8);

  Group e9;
  REQUIRE(gcob_group_elementary_abelian(3, 2, &e9.g) == GCOB_OK);
  CHECK(gcob_group_order(e9.g) == 9);

  Group bad;
  CHECK(gcob_group_elementary_abelian(6, 2, &bad.g) == GCOB_ERR_NOT_PRIME);
  CHECK(std::string(gcob_last_error()).find("prime") != std::string::npos);
}

TEST_CASE("table and generator constructors") {
  int z3[9] = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  Group g;
  REQUIRE(gcob_group_from_table(z3, 3, "z3", &g.g) == GCOB_OK);
  CHECK(gcob_group_order(g.g) == 3);
  CHECK(std::string(gcob_group_name(g.g)) == "z3");

  int broken[9] = {0, 1, 2, 1, 1, 0, 2, 0, 1};
  Group b;
  CHECK(gcob_group_from_table(broken, 3, "x", &b.g) == GCOB_ERR_NOT_A_GROUP);

  int gens[8] = {1, 2, 3, 0, 0, 3, 2, 1};  // rotation, reflection on 4 points
  Group d8;
  REQUIRE(gcob_group_from_generators(gens, 2, 4, "d8", &d8.g) == GCOB_OK);
  CHECK(gcob_group_order(d8.g) == 8);

  Group prod;
  REQUIRE(gcob_group_direct_product(d8.g, g.g, &prod.g) == GCOB_OK);
  CHECK(gcob_group_order(prod.g) == 24);
}

TEST_CASE("counting through the C surface") {
  Group d8;
  REQUIRE(gcob_group_dihedral(4, &d8.g) == GCOB_OK);
  int64_t v = 0;
  CHECK(gcob_count_subgroups(d8.g, &v) == GCOB_OK);
  CHECK(v == 10);
  CHECK(gcob_count_abelian_subgroups(d8.g, &v) == GCOB_OK);
  CHECK(v == 9);
  CHECK(gcob_count_cyclic_subgroups(d8.g, &v) == GCOB_OK);
  CHECK(v == 7);
  CHECK(gcob_commuting_pairs_count(d8.g, &v) == GCOB_OK);
  CHECK(v == 40);
  CHECK(gcob_r_n(d8.g, 1, 0, 1, &v) == GCOB_OK);
  CHECK(v == 9);
  CHECK(gcob_r_n(d8.g, 2, 0, 2, &v) == GCOB_OK);
  CHECK(v == 2);
  CHECK(gcob_g_n_size(d8.g, 2, 0, &v) == GCOB_OK);
  CHECK(v == 576);
}

TEST_CASE("budget errors cross the boundary") {
  Group z2;
  REQUIRE(gcob_group_cyclic(2, &z2.g) == GCOB_OK);
  int64_t v;
  CHECK(gcob_r_n(z2.g, 20, 0, 1, &v) == GCOB_ERR_BUDGET_EXCEEDED);
  CHECK(std::string(gcob_last_error()).find("budget") != std::string::npos);
}

TEST_CASE("closed forms and overflow") {
  int64_t v;
  CHECK(gcob_tau(12, &v) == GCOB_OK);
  CHECK(v == 6);
  CHECK(gcob_jordan2(4, &v) == GCOB_OK);
  CHECK(v == 12);
  CHECK(gcob_r1_dihedral(8, &v) == GCOB_OK);
  CHECK(v == 16);
  CHECK(gcob_r1_elementary_abelian(2, 4, &v) == GCOB_OK);
  CHECK(v == 51);
  CHECK(gcob_r1_elementary_abelian(97, 8, &v) == GCOB_ERR_OVERFLOW);
  CHECK(gcob_tau(0, &v) == GCOB_ERR_INVALID_ARGUMENT);
  CHECK(std::string(gcob_status_name(GCOB_ERR_NOT_PRIME)) == "not-prime");
}

TEST_CASE("catalog access") {
  Cat cat;
  REQUIRE(gcob_catalog_open(nullptr, &cat.c) == GCOB_OK);
  int n = gcob_catalog_size(cat.c);
  CHECK(n >= 50);
  CHECK(std::string(gcob_catalog_name(cat.c, 0)) == "Z_1");
  int idx_d8 = -1;
  for (int i = 0; i < n; ++i)
    if (std::string(gcob_catalog_name(cat.c, i)) == "D_8") idx_d8 = i;
  REQUIRE(idx_d8 >= 0);
  CHECK(gcob_catalog_order(cat.c, idx_d8) == 8);
  CHECK(gcob_catalog_declared_abelian(cat.c, idx_d8) == 0);
  int64_t v;
  CHECK(gcob_catalog_expected(cat.c, idx_d8, "subgroups", &v) == 1);
  CHECK(v == 10);
  CHECK(gcob_catalog_expected(cat.c, idx_d8, "r1", &v) == 1);
  CHECK(v == 9);
  CHECK(std::string(gcob_catalog_annotation(cat.c, idx_d8, "subgroups")) ==
        "+2");
  Group g;
  REQUIRE(gcob_catalog_build(cat.c, "SL(2,3)", &g.g) == GCOB_OK);
  CHECK(gcob_group_order(g.g) == 24);
  Group nope;
  CHECK(gcob_catalog_build(cat.c, "nope", &nope.g) == GCOB_ERR_UNKNOWN_GROUP);
  char* problems = gcob_catalog_self_test(cat.c);
  CHECK(problems == nullptr);
}

TEST_CASE("catalog path override via GCOB_CATALOG") {
  std::string path = "/tmp/gcob_capi_test_catalog.gcat";
  {
    std::ofstream f(path);
    f << "catalog-version 1\n"
         "entry OnlyOne order=5 kind=cyclic args=5 class=abelian\n";
  }
  setenv("GCOB_CATALOG", path.c_str(), 1);
  Cat cat;
  REQUIRE(gcob_catalog_open(nullptr, &cat.c) == GCOB_OK);
  CHECK(gcob_catalog_size(cat.c) == 1);
  unsetenv("GCOB_CATALOG");
  Cat dflt;
  REQUIRE(gcob_catalog_open(nullptr, &dflt.c) == GCOB_OK);
  CHECK(gcob_catalog_size(dflt.c) > 1);
  std::remove(path.c_str());

  Cat missing;
  CHECK(gcob_catalog_open("/nonexistent/file.gcat", &missing.c) == GCOB_ERR_IO);
}

TEST_CASE("reports through the C surface") {
  Cat cat;
  REQUIRE(gcob_catalog_open(nullptr, &cat.c) == GCOB_OK);
  gcob_report_options opt{};
  opt.genus_max = 2;
  gcob_report* rep = nullptr;
  REQUIRE(gcob_report_compute(cat.c, "Dic_5", &opt, &rep) == GCOB_OK);
  CHECK(std::string(gcob_report_name(rep)) == "Dic_5");
  CHECK(gcob_report_order(rep) == 20);
  CHECK(gcob_report_abelian(rep) == 0);
  CHECK(gcob_report_audit_passed(rep) == 1);
  int64_t v;
  CHECK(gcob_report_cell(rep, "subgroups", "value", &v) == 1);
  CHECK(v == 10);
  CHECK(gcob_report_cell(rep, "subgroups", "expected", &v) == 1);
  CHECK(v == 10);
  CHECK(std::string(gcob_report_cell_method(rep, "subgroups")) == "both-agree");
  CHECK(gcob_report_genus_count(rep) == 2);
  CHECK(gcob_report_r(rep, 1, "value", &v) == 1);
  CHECK(v == 9);
  CHECK(std::string(gcob_report_r_method(rep, 1)) == "both-agree");
  CHECK(gcob_report_r(rep, 2, "value", &v) == 1);
  CHECK(v == 2);
  CHECK(gcob_report_r(rep, 2, "vertices", &v) == 1);
  CHECK(v == 14400);
  CHECK(gcob_report_all_match(rep) == 1);
  CHECK(std::string(gcob_report_annotation(rep, "r1")) == "+2");
  gcob_report_free(rep);
}

TEST_CASE("components text and canonical divisor") {
  Group s3;
  REQUIRE(gcob_group_dihedral(3, &s3.g) == GCOB_OK);
  char* text = nullptr;
  REQUIRE(gcob_components_text(s3.g, 2, 0, 1, &text) == GCOB_OK);
  CHECK(std::string(text) == "component 301 size=162\n");
  gcob_string_free(text);
  int d;
  CHECK(gcob_cyclic_canonical(12, 8, 6, &d) == GCOB_OK);
  CHECK(d == 2);
  CHECK(gcob_convention_audit_passed() == 1);
  char* summary = gcob_convention_audit_summary();
  CHECK(std::string(summary).find("accepted") != std::string::npos);
  gcob_string_free(summary);
}

TEST_CASE("verify quick through the C surface") {
  Cat cat;
  REQUIRE(gcob_catalog_open(nullptr, &cat.c) == GCOB_OK);
  gcob_checks* checks = nullptr;
  REQUIRE(gcob_verify_run(cat.c, "quick", 2, 0, &checks) == GCOB_OK);
  CHECK(gcob_checks_size(checks) > 10);
  CHECK(gcob_checks_all_passed(checks) == 1);
  for (int i = 0; i < gcob_checks_size(checks); ++i) {
    CHECK(gcob_checks_passed(checks, i) == 1);
    CHECK(std::string(gcob_checks_name(checks, i)).size() > 0);
  }
  gcob_checks_free(checks);
  gcob_checks* bad = nullptr;
  CHECK(gcob_verify_run(cat.c, "wat", 1, 0, &bad) ==
        GCOB_ERR_INVALID_ARGUMENT);
}
