// Acceptance suite: one line per criterion, nonzero exit if any blocking
// criterion fails. Criterion 7 is a reported diagnostic, never blocking.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "closed_forms.hpp"
#include "invariant.hpp"
#include "report.hpp"
#include "subgroups.hpp"
#include "verify.hpp"

using namespace gcob;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double s() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void report(const std::string& name, bool pass, const std::string& detail,
            bool blocking = true) {
  std::printf("%s %s - %s\n", pass ? "PASS" : (blocking ? "FAIL" : "WARN"),
              name.c_str(), detail.c_str());
  if (!pass && blocking) ++g_failures;
}

void criterion1_table_r1(const Catalog& cat) {
  Timer t;
  int rows = 0, mismatches = 0;
  std::string bad;
  for (const auto& e : cat.all_entries(30)) {
    if (!e.expected.r1) continue;
    FiniteGroup g = cat.build(e);
    std::int64_t r1 = r_n(g, 1).components;
    ++rows;
    if (r1 != *e.expected.r1) {
      ++mismatches;
      bad += " " + e.name + "=" + std::to_string(r1) + "!=" +
             std::to_string(*e.expected.r1);
    }
  }
  double elapsed = t.s();
  bool pass = mismatches == 0 && elapsed < 60.0 && rows >= 80;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "brute-force r1 equals the reference on %d rows in %.2fs "
                "(limit 60s, single thread)",
                rows, elapsed);
  report("criterion-1-table-r1", pass, buf + bad);
}

void criterion2_subgroup_columns(const Catalog& cat) {
  Timer t;
  int rows = 0, mismatches = 0;
  std::string bad;
  for (const auto& e : cat.all_entries(30)) {
    FiniteGroup g = cat.build(e);
    auto subs = all_subgroups(g);
    std::int64_t total = static_cast<std::int64_t>(subs.size());
    std::int64_t abelian = 0;
    for (const auto& s : subs)
      if (s.is_abelian) ++abelian;
    ++rows;
    if (e.expected.subgroups && *e.expected.subgroups != total) {
      ++mismatches;
      bad += " " + e.name + ":subgroups";
    }
    if (e.expected.abelian_subgroups &&
        *e.expected.abelian_subgroups != abelian) {
      ++mismatches;
      bad += " " + e.name + ":abelian";
    }
  }
  double elapsed = t.s();
  bool pass = mismatches == 0 && elapsed < 30.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "subgroup and abelian-subgroup columns match on %d rows in "
                "%.2fs (limit 30s); +k suffixes compared by leading number",
                rows, elapsed);
  report("criterion-2-subgroup-columns", pass, buf + bad);
}

void criterion3_closed_vs_brute() {
  Timer t;
  std::string bad;
  for (int n = 1; n <= 60; ++n)
    if (r_n(cyclic(n), 1).components != r1_cyclic(n))
      bad += " cyclic:" + std::to_string(n);
  for (int n = 1; n <= 12; ++n)
    if (r_n(dihedral(n), 1).components != r1_dihedral(n))
      bad += " dihedral:" + std::to_string(n);
  for (int n = 1; n <= 7; ++n)
    if (r_n(dicyclic(n), 1).components != r1_dicyclic(n))
      bad += " dicyclic:" + std::to_string(n);
  for (auto [p, maxn] :
       std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {5, 2}})
    for (int n = 1; n <= maxn; ++n)
      if (static_cast<Wide>(r_n(elementary_abelian(p, n), 1).components) !=
          r1_elementary_abelian(p, n))
        bad += " elemab:" + std::to_string(p) + "," + std::to_string(n);
  double elapsed = t.s();
  bool pass = bad.empty() && elapsed < 60.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "family formulas equal brute force exhaustively (cyclic<=60, "
                "dihedral<=12, dicyclic<=7, elemab) in %.2fs (limit 60s)",
                elapsed);
  report("criterion-3-closed-vs-brute", pass, buf + bad);
}

void criterion4_elemab_family_consistency() {
  std::string bad;
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t n = 1; n <= 6; ++n) {
      Wide diff = r1_elementary_abelian(p, n + 1) - r1_elementary_abelian(p, n);
      Wide rec = f_recurrence(p, n);
      Wide prodform = 1;
      for (std::int64_t i = 0; i < n - 1; ++i) prodform *= p;
      Wide pn = 1;
      for (std::int64_t i = 0; i < n; ++i) pn *= p;
      prodform *= pn + p - 1;
      if (diff != rec || rec != prodform)
        bad += " p=" + std::to_string(p) + ",n=" + std::to_string(n);
    }
  }
  std::int64_t want[4] = {2, 5, 15, 51};
  for (int n = 1; n <= 4; ++n)
    if (r1_elementary_abelian(2, n) != static_cast<Wide>(want[n - 1]))
      bad += " seq:n=" + std::to_string(n);
  report("criterion-4-elemab-family-consistency", bad.empty(),
         "difference = recurrence = p^(n-1)(p^n+p-1) for p in {2,3,5,7}, "
         "n<=6; p=2 sequence starts 2,5,15,51" +
             bad);
}

void criterion5_subgroup_formulas() {
  std::string bad;
  for (int n = 1; n <= 15; ++n)
    if (count_subgroups(dihedral(n)) != tau(n) + sigma(n))
      bad += " dihedral:" + std::to_string(n);
  for (int n = 1; n <= 10; ++n)
    if (count_subgroups(dicyclic(n)) != tau(2 * n) + sigma(n))
      bad += " dicyclic:" + std::to_string(n);
  report("criterion-5-subgroup-formulas", bad.empty(),
         "lattice enumeration equals tau(n)+sigma(n) (n<=15) and "
         "tau(2n)+sigma(n) (n<=10)" +
             bad);
}

void criterion6_property_suites(const Catalog& cat) {
  Timer t;
  VerifyOptions opt;
  opt.level = VerifyLevel::full;
  auto results = run_verify(cat, opt);
  // (a)..(g) name the required checks; the rest of the suite must pass too
  const std::vector<std::pair<std::string, std::string>> mapping = {
      {"a", "sandwich"},           {"b", "abelian-g2-empty"},
      {"c", "move-closure"},       {"d", "jordan-orbit-sizes"},
      {"e", "burnside-com"},       {"f", "relabeling-invariance"},
      {"g", "thread-determinism"},
  };
  for (const auto& [letter, check] : mapping) {
    bool found = false, pass = false;
    std::string detail;
    for (const auto& r : results)
      if (r.name == check) {
        found = true;
        pass = r.passed;
        detail = r.detail;
      }
    report("criterion-6" + letter + "-" + check, found && pass, detail);
  }
  bool rest = all_passed(results);
  char buf[96];
  std::snprintf(buf, sizeof(buf), "full verify suite: %zu checks in %.2fs",
                results.size(), t.s());
  report("criterion-6-verify-full", rest, buf);
}

void criterion7_diagnostic(const Catalog& cat) {
  FiniteGroup g = cat.build("Dic_5");
  RnResult res = r_n(g, 2);
  char buf[200];
  std::snprintf(
      buf, sizeof(buf),
      "r2(Dic_5) over %llu of 160000 indexed sequences = %lld; the reference "
      "annotation '+2' read as a genus-2 contribution %s",
      static_cast<unsigned long long>(res.vertex_count),
      static_cast<long long>(res.components),
      res.components == 2 ? "agrees" : "does not match");
  report("criterion-7-dic5-diagnostic", true, buf, /*blocking=*/false);
}

}  // namespace

int main() {
  Catalog cat = Catalog::open_default();
  criterion1_table_r1(cat);
  criterion2_subgroup_columns(cat);
  criterion3_closed_vs_brute();
  criterion4_elemab_family_consistency();
  criterion5_subgroup_formulas();
  criterion6_property_suites(cat);
  criterion7_diagnostic(cat);
  if (g_failures == 0) {
    std::printf("acceptance: all blocking criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
