#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "invariant.hpp"

namespace gcob {

enum class Method { brute_force, closed_form, both_agree, mismatch };
const char* method_str(Method m);

// One computed number with its provenance and the catalog expectation.
struct NumberCell {
  std::int64_t value = 0;
  Method method = Method::brute_force;
  std::optional<std::int64_t> closed_form;
  std::optional<std::int64_t> expected;
  bool matches_expected = true;
  double ms = 0.0;
};

struct GenusCell {
  int genus = 1;
  std::int64_t value = 0;
  Method method = Method::brute_force;
  std::optional<std::int64_t> closed_form;
  std::optional<std::int64_t> expected;
  bool matches_expected = true;
  std::uint64_t vertex_count = 0;
  std::uint64_t discarded_minimality = 0;
  std::uint64_t discarded_total = 0;
  double ms = 0.0;
};

struct InvariantReport {
  std::string name;
  int order = 0;
  bool abelian = false;
  NumberCell subgroups;
  NumberCell abelian_subgroups;
  NumberCell cyclic_subgroups;
  NumberCell commuting_pairs;
  std::vector<GenusCell> r;  // r[i] is genus i+1
  std::string convention;
  bool convention_audit_passed = false;
  std::string note;
  std::string note_subgroups;  // unresolved "+k" annotations from the catalog
  std::string note_r1;
  std::string error;  // set when a computation failed (budget, cap, ...)
  bool all_match = true;
};

struct ReportOptions {
  int genus_max = 1;
  std::uint64_t budget = kDefaultBudget;
  int threads = 1;
  bool diagnostics = false;
};

InvariantReport compute_report(const FiniteGroup& g, const FamilyInfo& family,
                               const CatalogExpected& expected,
                               const std::string& display_name,
                               const ReportOptions& opt = {});

InvariantReport compute_report(const CatalogEntry& entry, const Catalog& cat,
                               const ReportOptions& opt = {});

}  // namespace gcob
