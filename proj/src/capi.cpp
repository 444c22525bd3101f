#include "gcob.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "catalog.hpp"
#include "closed_forms.hpp"
#include "error.hpp"
#include "group.hpp"
#include "invariant.hpp"
#include "report.hpp"
#include "subgroups.hpp"
#include "verify.hpp"

using namespace gcob;

struct gcob_group {
  FiniteGroup g;
  FamilyInfo family;
  CatalogExpected expected;
};
struct gcob_catalog {
  Catalog cat;
};
struct gcob_report {
  InvariantReport rep;
};
struct gcob_checks {
  std::vector<CheckResult> results;
};

namespace {

thread_local std::string t_last_error;

gcob_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_argument: return GCOB_ERR_INVALID_ARGUMENT;
    case ErrorCode::not_a_group: return GCOB_ERR_NOT_A_GROUP;
    case ErrorCode::closure_cap_exceeded: return GCOB_ERR_CLOSURE_CAP;
    case ErrorCode::order_cap_exceeded: return GCOB_ERR_ORDER_CAP;
    case ErrorCode::budget_exceeded: return GCOB_ERR_BUDGET_EXCEEDED;
    case ErrorCode::unknown_group: return GCOB_ERR_UNKNOWN_GROUP;
    case ErrorCode::order_mismatch: return GCOB_ERR_ORDER_MISMATCH;
    case ErrorCode::not_prime: return GCOB_ERR_NOT_PRIME;
    case ErrorCode::non_integral_result: return GCOB_ERR_NON_INTEGRAL;
    case ErrorCode::parse_error: return GCOB_ERR_PARSE;
    case ErrorCode::io_error: return GCOB_ERR_IO;
    case ErrorCode::index_out_of_range: return GCOB_ERR_INDEX_RANGE;
    case ErrorCode::overflow: return GCOB_ERR_OVERFLOW;
  }
  return GCOB_ERR_INTERNAL;
}

template <typename Fn>
gcob_status guarded(Fn&& fn) {
  try {
    fn();
    return GCOB_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return GCOB_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return GCOB_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::uint64_t budget_or_default(uint64_t budget) {
  return budget == 0 ? kDefaultBudget : budget;
}

const NumberCell* cell_by_name(const InvariantReport& rep, const char* cell) {
  if (!cell) return nullptr;
  std::string c = cell;
  if (c == "subgroups") return &rep.subgroups;
  if (c == "abelian_subgroups") return &rep.abelian_subgroups;
  if (c == "cyclic_subgroups") return &rep.cyclic_subgroups;
  if (c == "commuting_pairs") return &rep.commuting_pairs;
  return nullptr;
}

}  // namespace

extern "C" {

const char* gcob_status_name(gcob_status s) {
  switch (s) {
    case GCOB_OK: return "ok";
    case GCOB_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case GCOB_ERR_NOT_A_GROUP: return "not-a-group";
    case GCOB_ERR_CLOSURE_CAP: return "closure-cap-exceeded";
    case GCOB_ERR_ORDER_CAP: return "order-cap-exceeded";
    case GCOB_ERR_BUDGET_EXCEEDED: return "budget-exceeded";
    case GCOB_ERR_UNKNOWN_GROUP: return "unknown-group";
    case GCOB_ERR_ORDER_MISMATCH: return "order-mismatch";
    case GCOB_ERR_NOT_PRIME: return "not-prime";
    case GCOB_ERR_NON_INTEGRAL: return "non-integral-result";
    case GCOB_ERR_PARSE: return "parse-error";
    case GCOB_ERR_IO: return "io-error";
    case GCOB_ERR_INDEX_RANGE: return "index-out-of-range";
    case GCOB_ERR_OVERFLOW: return "overflow";
    case GCOB_ERR_INTERNAL: return "internal-error";
  }
  return "?";
}

const char* gcob_last_error(void) { return t_last_error.c_str(); }

void gcob_string_free(char* s) { std::free(s); }

/* ---- groups ---- */

gcob_status gcob_group_cyclic(int n, gcob_group** out) {
  return guarded([&] {
    *out = new gcob_group{cyclic(n), {Family::cyclic, n, 0}, {}};
  });
}

gcob_status gcob_group_dihedral(int n, gcob_group** out) {
  return guarded([&] {
    *out = new gcob_group{dihedral(n), {Family::dihedral, n, 0}, {}};
  });
}

gcob_status gcob_group_dicyclic(int n, gcob_group** out) {
  return guarded([&] {
    *out = new gcob_group{dicyclic(n), {Family::dicyclic, n, 0}, {}};
  });
}

gcob_status gcob_group_elementary_abelian(int p, int n, gcob_group** out) {
  return guarded([&] {
    *out = new gcob_group{elementary_abelian(p, n),
                          {Family::elementary_abelian, p, n},
                          {}};
  });
}

gcob_status gcob_group_from_table(const int* mul, int order, const char* name,
                                  gcob_group** out) {
  return guarded([&] {
    if (!mul) throw InvalidArgumentError("mul table is null");
    std::vector<int> flat(mul, mul + static_cast<size_t>(order) * order);
    *out = new gcob_group{
        FiniteGroup::from_table_flat(std::move(flat), order, name ? name : ""),
        {},
        {}};
  });
}

gcob_status gcob_group_from_generators(const int* images, int ngens,
                                       int npoints, const char* name,
                                       gcob_group** out) {
  return guarded([&] {
    if (!images && ngens > 0)
      throw InvalidArgumentError("generator images are null");
    std::vector<Perm> gens;
    for (int i = 0; i < ngens; ++i)
      gens.emplace_back(images + static_cast<size_t>(i) * npoints,
                        images + static_cast<size_t>(i + 1) * npoints);
    *out = new gcob_group{
        FiniteGroup::from_generators(gens, name ? name : ""), {}, {}};
  });
}

gcob_status gcob_group_direct_product(const gcob_group* a, const gcob_group* b,
                                      gcob_group** out) {
  return guarded([&] {
    *out = new gcob_group{FiniteGroup::direct_product(a->g, b->g), {}, {}};
  });
}

gcob_status gcob_group_parse_spec(const char* spec, const gcob_catalog* catalog,
                                  gcob_group** out) {
  return guarded([&] {
    if (!spec) throw InvalidArgumentError("spec is null");
    BuiltGroup bg = build_group_spec(spec, catalog ? &catalog->cat : nullptr);
    *out = new gcob_group{std::move(bg.group), bg.family, bg.expected};
  });
}

void gcob_group_free(gcob_group* g) { delete g; }

int gcob_group_order(const gcob_group* g) { return g->g.order(); }
const char* gcob_group_name(const gcob_group* g) { return g->g.name().c_str(); }
int gcob_group_mul(const gcob_group* g, int a, int b) { return g->g.mul(a, b); }
int gcob_group_inv(const gcob_group* g, int a) { return g->g.inv(a); }
int gcob_group_commutator(const gcob_group* g, int k, int gg) {
  return g->g.commutator(k, gg);
}
int gcob_group_is_abelian(const gcob_group* g) { return g->g.is_abelian(); }
int gcob_group_conjugacy_class_count(const gcob_group* g) {
  return g->g.conjugacy_class_count();
}
int gcob_group_element_order(const gcob_group* g, int x) {
  return g->g.element_order(x);
}

/* ---- subgroup counting ---- */

gcob_status gcob_count_subgroups(const gcob_group* g, int64_t* out) {
  return guarded([&] { *out = count_subgroups(g->g); });
}
gcob_status gcob_count_abelian_subgroups(const gcob_group* g, int64_t* out) {
  return guarded([&] { *out = count_abelian_subgroups(g->g); });
}
gcob_status gcob_count_cyclic_subgroups(const gcob_group* g, int64_t* out) {
  return guarded([&] { *out = count_cyclic_subgroups(g->g); });
}
gcob_status gcob_commuting_pairs_count(const gcob_group* g, int64_t* out) {
  return guarded([&] { *out = commuting_pairs_count(g->g); });
}

/* ---- invariant ---- */

gcob_status gcob_r_n(const gcob_group* g, int genus, uint64_t budget,
                     int threads, int64_t* out) {
  return guarded([&] {
    RnOptions opt;
    opt.budget = budget_or_default(budget);
    opt.threads = threads;
    *out = r_n(g->g, genus, opt).components;
  });
}

gcob_status gcob_g_n_size(const gcob_group* g, int genus, uint64_t budget,
                          int64_t* out) {
  return guarded([&] {
    *out = static_cast<int64_t>(
        enumerate_g_indices(g->g, genus, budget_or_default(budget)).size());
  });
}

gcob_status gcob_components_text(const gcob_group* g, int genus,
                                 uint64_t budget, int threads, char** out) {
  return guarded([&] {
    RnOptions opt;
    opt.budget = budget_or_default(budget);
    opt.threads = threads;
    *out = dup_string(components_text(g->g, genus, opt));
  });
}

gcob_status gcob_cyclic_canonical(int n, int g, int k, int* out) {
  return guarded([&] { *out = cyclic_canonical(n, g, k); });
}

int gcob_convention_audit_passed(void) {
  return convention_audit().default_passed ? 1 : 0;
}

char* gcob_convention_audit_summary(void) {
  return dup_string(convention_audit().summary());
}

/* ---- closed forms ---- */

#define GCOB_WRAP_INT_FN(cname, fn)                       \
  gcob_status cname(int64_t n, int64_t* out) {            \
    return guarded([&] { *out = fn(n); });                \
  }

GCOB_WRAP_INT_FN(gcob_tau, tau)
GCOB_WRAP_INT_FN(gcob_sigma, sigma)
GCOB_WRAP_INT_FN(gcob_jordan2, jordan2)
GCOB_WRAP_INT_FN(gcob_r1_cyclic, r1_cyclic)
GCOB_WRAP_INT_FN(gcob_r1_dihedral, r1_dihedral)
GCOB_WRAP_INT_FN(gcob_r1_dicyclic, r1_dicyclic)
GCOB_WRAP_INT_FN(gcob_subgroup_count_dihedral, subgroup_count_dihedral)
GCOB_WRAP_INT_FN(gcob_subgroup_count_dicyclic, subgroup_count_dicyclic)

#undef GCOB_WRAP_INT_FN

gcob_status gcob_r1_elementary_abelian(int64_t p, int64_t n, int64_t* out) {
  return guarded([&] {
    Wide v = r1_elementary_abelian(p, n);
    if (v > static_cast<Wide>(INT64_MAX))
      throw OverflowError("r1 value " + wide_str(v) + " exceeds int64");
    *out = static_cast<int64_t>(v);
  });
}

gcob_status gcob_f_recurrence(int64_t p, int64_t n, int64_t* out) {
  return guarded([&] {
    Wide v = f_recurrence(p, n);
    if (v > static_cast<Wide>(INT64_MAX))
      throw OverflowError("F value " + wide_str(v) + " exceeds int64");
    *out = static_cast<int64_t>(v);
  });
}

/* ---- catalog ---- */

gcob_status gcob_catalog_open(const char* path, gcob_catalog** out) {
  return guarded([&] {
    *out = new gcob_catalog{path ? Catalog::from_file(path)
                                 : Catalog::open_default()};
  });
}

void gcob_catalog_free(gcob_catalog* c) { delete c; }

int gcob_catalog_size(const gcob_catalog* c) {
  return static_cast<int>(c->cat.entries().size());
}

static const CatalogEntry* entry_at(const gcob_catalog* c, int idx) {
  if (idx < 0 || idx >= static_cast<int>(c->cat.entries().size()))
    return nullptr;
  return &c->cat.entries()[idx];
}

const char* gcob_catalog_name(const gcob_catalog* c, int idx) {
  const CatalogEntry* e = entry_at(c, idx);
  return e ? e->name.c_str() : "";
}

int gcob_catalog_order(const gcob_catalog* c, int idx) {
  const CatalogEntry* e = entry_at(c, idx);
  return e ? e->order : 0;
}

int gcob_catalog_declared_abelian(const gcob_catalog* c, int idx) {
  const CatalogEntry* e = entry_at(c, idx);
  return e ? (e->declared_abelian ? 1 : 0) : -1;
}

const char* gcob_catalog_note(const gcob_catalog* c, int idx) {
  const CatalogEntry* e = entry_at(c, idx);
  return e ? e->note.c_str() : "";
}

int gcob_catalog_expected(const gcob_catalog* c, int idx, const char* key,
                          int64_t* out) {
  const CatalogEntry* e = entry_at(c, idx);
  if (!e || !key) return 0;
  std::string k = key;
  const std::optional<std::int64_t>* v = nullptr;
  if (k == "subgroups") v = &e->expected.subgroups;
  else if (k == "abelian") v = &e->expected.abelian_subgroups;
  else if (k == "r1") v = &e->expected.r1;
  if (!v || !v->has_value()) return 0;
  *out = **v;
  return 1;
}

const char* gcob_catalog_annotation(const gcob_catalog* c, int idx,
                                    const char* key) {
  const CatalogEntry* e = entry_at(c, idx);
  if (!e || !key) return "";
  std::string k = key;
  if (k == "subgroups") return e->expected.note_subgroups.c_str();
  if (k == "r1") return e->expected.note_r1.c_str();
  return "";
}

gcob_status gcob_catalog_build(const gcob_catalog* c, const char* name,
                               gcob_group** out) {
  return guarded([&] {
    if (!name) throw InvalidArgumentError("name is null");
    const CatalogEntry* e = c->cat.find(name);
    if (!e) throw UnknownGroupError("unknown group '" + std::string(name) + "'");
    *out = new gcob_group{c->cat.build(*e), c->cat.family_of(*e), e->expected};
  });
}

char* gcob_catalog_self_test(const gcob_catalog* c) {
  auto problems = c->cat.self_test();
  if (problems.empty()) return nullptr;
  std::string joined;
  for (const auto& p : problems) {
    joined += p;
    joined += "\n";
  }
  return dup_string(joined);
}

/* ---- reports ---- */

gcob_status gcob_report_compute(const gcob_catalog* catalog, const char* spec,
                                const gcob_report_options* copt,
                                gcob_report** out) {
  return guarded([&] {
    if (!spec) throw InvalidArgumentError("spec is null");
    ReportOptions opt;
    if (copt) {
      opt.genus_max = copt->genus_max > 0 ? copt->genus_max : 1;
      opt.budget = budget_or_default(copt->budget);
      opt.threads = copt->threads;
      opt.diagnostics = copt->diagnostics != 0;
    }
    BuiltGroup bg = build_group_spec(spec, catalog ? &catalog->cat : nullptr);
    std::string display = spec;
    InvariantReport rep =
        compute_report(bg.group, bg.family, bg.expected, display, opt);
    if (catalog) {
      if (const CatalogEntry* e = catalog->cat.find(spec)) rep.note = e->note;
    }
    *out = new gcob_report{std::move(rep)};
  });
}

void gcob_report_free(gcob_report* r) { delete r; }

const char* gcob_report_name(const gcob_report* r) { return r->rep.name.c_str(); }
int gcob_report_order(const gcob_report* r) { return r->rep.order; }
int gcob_report_abelian(const gcob_report* r) { return r->rep.abelian ? 1 : 0; }
int gcob_report_all_match(const gcob_report* r) { return r->rep.all_match ? 1 : 0; }
const char* gcob_report_error(const gcob_report* r) { return r->rep.error.c_str(); }
const char* gcob_report_convention(const gcob_report* r) {
  return r->rep.convention.c_str();
}
int gcob_report_audit_passed(const gcob_report* r) {
  return r->rep.convention_audit_passed ? 1 : 0;
}
const char* gcob_report_note(const gcob_report* r) { return r->rep.note.c_str(); }

int gcob_report_cell(const gcob_report* r, const char* cell, const char* field,
                     int64_t* out) {
  const NumberCell* c = cell_by_name(r->rep, cell);
  if (!c || !field) return 0;
  std::string f = field;
  if (f == "value") {
    *out = c->value;
    return 1;
  }
  if (f == "closed_form" && c->closed_form) {
    *out = *c->closed_form;
    return 1;
  }
  if (f == "expected" && c->expected) {
    *out = *c->expected;
    return 1;
  }
  return 0;
}

const char* gcob_report_cell_method(const gcob_report* r, const char* cell) {
  const NumberCell* c = cell_by_name(r->rep, cell);
  return c ? method_str(c->method) : "";
}

double gcob_report_cell_ms(const gcob_report* r, const char* cell) {
  const NumberCell* c = cell_by_name(r->rep, cell);
  return c ? c->ms : 0.0;
}

int gcob_report_cell_match(const gcob_report* r, const char* cell) {
  const NumberCell* c = cell_by_name(r->rep, cell);
  return c ? (c->matches_expected ? 1 : 0) : 0;
}

const char* gcob_report_annotation(const gcob_report* r, const char* cell) {
  if (!cell) return "";
  std::string c = cell;
  if (c == "subgroups") return r->rep.note_subgroups.c_str();
  if (c == "r1") return r->rep.note_r1.c_str();
  return "";
}

int gcob_report_genus_count(const gcob_report* r) {
  return static_cast<int>(r->rep.r.size());
}

static const GenusCell* genus_cell(const gcob_report* r, int genus) {
  for (const auto& c : r->rep.r)
    if (c.genus == genus) return &c;
  return nullptr;
}

int gcob_report_r(const gcob_report* r, int genus, const char* field,
                  int64_t* out) {
  const GenusCell* c = genus_cell(r, genus);
  if (!c || !field) return 0;
  std::string f = field;
  if (f == "value") { *out = c->value; return 1; }
  if (f == "closed_form" && c->closed_form) { *out = *c->closed_form; return 1; }
  if (f == "expected" && c->expected) { *out = *c->expected; return 1; }
  if (f == "vertices") { *out = static_cast<int64_t>(c->vertex_count); return 1; }
  if (f == "discarded_minimality") {
    *out = static_cast<int64_t>(c->discarded_minimality);
    return 1;
  }
  if (f == "discarded_total") {
    *out = static_cast<int64_t>(c->discarded_total);
    return 1;
  }
  return 0;
}

const char* gcob_report_r_method(const gcob_report* r, int genus) {
  const GenusCell* c = genus_cell(r, genus);
  return c ? method_str(c->method) : "";
}

double gcob_report_r_ms(const gcob_report* r, int genus) {
  const GenusCell* c = genus_cell(r, genus);
  return c ? c->ms : 0.0;
}

int gcob_report_r_match(const gcob_report* r, int genus) {
  const GenusCell* c = genus_cell(r, genus);
  return c ? (c->matches_expected ? 1 : 0) : 0;
}

/* ---- verify ---- */

gcob_status gcob_verify_run(const gcob_catalog* catalog, const char* level,
                            int threads, int diagnostics, gcob_checks** out) {
  return guarded([&] {
    if (!catalog) throw InvalidArgumentError("catalog is null");
    VerifyOptions opt;
    std::string l = level ? level : "quick";
    if (l == "quick") opt.level = VerifyLevel::quick;
    else if (l == "full") opt.level = VerifyLevel::full;
    else throw InvalidArgumentError("level must be quick|full");
    opt.threads = threads;
    opt.diagnostics = diagnostics != 0;
    *out = new gcob_checks{run_verify(catalog->cat, opt)};
  });
}

void gcob_checks_free(gcob_checks* c) { delete c; }

int gcob_checks_size(const gcob_checks* c) {
  return static_cast<int>(c->results.size());
}

const char* gcob_checks_name(const gcob_checks* c, int idx) {
  return c->results[idx].name.c_str();
}

int gcob_checks_passed(const gcob_checks* c, int idx) {
  return c->results[idx].passed ? 1 : 0;
}

int gcob_checks_diagnostic(const gcob_checks* c, int idx) {
  return c->results[idx].diagnostic ? 1 : 0;
}

const char* gcob_checks_detail(const gcob_checks* c, int idx) {
  return c->results[idx].detail.c_str();
}

int gcob_checks_all_passed(const gcob_checks* c) {
  return all_passed(c->results) ? 1 : 0;
}

}  // extern "C"
