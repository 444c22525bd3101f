#include "report.hpp"

#include <chrono>

#include "closed_forms.hpp"
#include "subgroups.hpp"

namespace gcob {

const char* method_str(Method m) {
  switch (m) {
    case Method::brute_force: return "brute-force";
    case Method::closed_form: return "closed-form";
    case Method::both_agree: return "both-agree";
    case Method::mismatch: return "MISMATCH";
  }
  return "?";
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// Fills value/method/match given an optional closed-form route.
void finish_cell(NumberCell& cell, std::optional<std::int64_t> closed,
                 std::optional<std::int64_t> expected, bool* all_match) {
  cell.closed_form = closed;
  cell.expected = expected;
  if (closed) {
    cell.method = (*closed == cell.value) ? Method::both_agree : Method::mismatch;
    if (cell.method == Method::mismatch) *all_match = false;
  }
  if (expected && *expected != cell.value) {
    cell.matches_expected = false;
    *all_match = false;
  }
}

std::optional<std::int64_t> to_i64(Wide v) {
  if (v > static_cast<Wide>(INT64_MAX)) return std::nullopt;
  return static_cast<std::int64_t>(v);
}

}  // namespace

InvariantReport compute_report(const FiniteGroup& g, const FamilyInfo& family,
                               const CatalogExpected& expected,
                               const std::string& display_name,
                               const ReportOptions& opt) {
  InvariantReport rep;
  rep.name = display_name;
  rep.order = g.order();
  rep.abelian = g.is_abelian();
  rep.convention = convention_str(kDefaultConvention);
  rep.convention_audit_passed = convention_audit().default_passed;
  rep.note_subgroups = expected.note_subgroups;
  rep.note_r1 = expected.note_r1;
  if (!rep.convention_audit_passed) rep.all_match = false;

  try {
    // subgroup lattice
    auto t0 = std::chrono::steady_clock::now();
    auto subs = all_subgroups(g);
    rep.subgroups.value = static_cast<std::int64_t>(subs.size());
    std::int64_t ab = 0;
    for (const auto& s : subs)
      if (s.is_abelian) ++ab;
    rep.subgroups.ms = ms_since(t0);
    rep.abelian_subgroups.value = ab;
    rep.abelian_subgroups.ms = rep.subgroups.ms;

    std::optional<std::int64_t> sub_closed;
    if (family.family == Family::cyclic) sub_closed = tau(family.a);
    if (family.family == Family::dihedral)
      sub_closed = subgroup_count_dihedral(family.a);
    if (family.family == Family::dicyclic)
      sub_closed = subgroup_count_dicyclic(family.a);
    finish_cell(rep.subgroups, sub_closed, expected.subgroups, &rep.all_match);
    finish_cell(rep.abelian_subgroups, std::nullopt, expected.abelian_subgroups,
                &rep.all_match);

    t0 = std::chrono::steady_clock::now();
    rep.cyclic_subgroups.value = count_cyclic_subgroups(g);
    rep.cyclic_subgroups.ms = ms_since(t0);
    std::optional<std::int64_t> cyc_closed;
    if (family.family == Family::cyclic) cyc_closed = tau(family.a);
    if (family.family == Family::dihedral)
      cyc_closed = family.a + tau(family.a);  // Cyc of the order-2n dihedral
    if (family.family == Family::dicyclic)
      cyc_closed = tau(2 * family.a) + family.a;
    finish_cell(rep.cyclic_subgroups, cyc_closed, std::nullopt, &rep.all_match);

    t0 = std::chrono::steady_clock::now();
    rep.commuting_pairs.value = commuting_pairs_count(g);
    rep.commuting_pairs.ms = ms_since(t0);
    // Burnside route: commuting pairs = classes * |G|
    std::int64_t burnside =
        static_cast<std::int64_t>(g.conjugacy_class_count()) * g.order();
    finish_cell(rep.commuting_pairs, burnside, std::nullopt, &rep.all_match);

    for (int genus = 1; genus <= opt.genus_max; ++genus) {
      GenusCell cell;
      cell.genus = genus;
      RnOptions ropt;
      ropt.budget = opt.budget;
      ropt.threads = opt.threads;
      t0 = std::chrono::steady_clock::now();
      RnResult res;
      try {
        res = r_n(g, genus, ropt);
      } catch (const Error& e) {
        rep.error = e.what();
        if (genus == 1 && expected.r1) rep.all_match = false;
        break;
      }
      cell.ms = ms_since(t0);
      cell.value = res.components;
      cell.vertex_count = res.vertex_count;
      cell.discarded_minimality = res.discarded_minimality;
      cell.discarded_total = res.discarded_total;
      if (res.discarded_total != 0) rep.all_match = false;  // relator broke

      std::optional<std::int64_t> closed;
      if (genus == 1) {
        switch (family.family) {
          case Family::cyclic: closed = r1_cyclic(family.a); break;
          case Family::dihedral: closed = r1_dihedral(family.a); break;
          case Family::dicyclic: closed = r1_dicyclic(family.a); break;
          case Family::elementary_abelian:
            closed = to_i64(r1_elementary_abelian(family.a, family.b));
            break;
          case Family::none: break;
        }
      } else if (g.is_abelian()) {
        closed = 0;  // G(n) is empty for n > 1
      }
      std::optional<std::int64_t> exp_r =
          (genus == 1) ? expected.r1 : std::nullopt;
      cell.closed_form = closed;
      cell.expected = exp_r;
      if (closed) {
        cell.method =
            (*closed == cell.value) ? Method::both_agree : Method::mismatch;
        if (cell.method == Method::mismatch) rep.all_match = false;
      }
      if (exp_r && *exp_r != cell.value) {
        cell.matches_expected = false;
        rep.all_match = false;
      }
      rep.r.push_back(cell);
    }
  } catch (const Error& e) {
    rep.error = e.what();
    if (expected.any()) rep.all_match = false;
  }
  return rep;
}

InvariantReport compute_report(const CatalogEntry& entry, const Catalog& cat,
                               const ReportOptions& opt) {
  FiniteGroup g = cat.build(entry);
  InvariantReport rep =
      compute_report(g, cat.family_of(entry), entry.expected, entry.name, opt);
  rep.note = entry.note;
  return rep;
}

}  // namespace gcob
