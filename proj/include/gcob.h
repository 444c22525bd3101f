/* gcob: genus-graded invariant r_n(G) of finite groups, subgroup-lattice
 * counts, and the family closed forms, behind a plain C interface.
 *
 * Conventions:
 *   - Handles are opaque; every *_new/_open call pairs with a *_free.
 *   - Functions that can fail return gcob_status; results go to out-params.
 *   - gcob_last_error() returns a thread-local message for the last failure.
 *   - Group handles are immutable and safe to share across threads.
 */
#ifndef GCOB_H
#define GCOB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gcob_status {
  GCOB_OK = 0,
  GCOB_ERR_INVALID_ARGUMENT = 1,
  GCOB_ERR_NOT_A_GROUP = 2,
  GCOB_ERR_CLOSURE_CAP = 3,
  GCOB_ERR_ORDER_CAP = 4,
  GCOB_ERR_BUDGET_EXCEEDED = 5,
  GCOB_ERR_UNKNOWN_GROUP = 6,
  GCOB_ERR_ORDER_MISMATCH = 7,
  GCOB_ERR_NOT_PRIME = 8,
  GCOB_ERR_NON_INTEGRAL = 9,
  GCOB_ERR_PARSE = 10,
  GCOB_ERR_IO = 11,
  GCOB_ERR_INDEX_RANGE = 12,
  GCOB_ERR_OVERFLOW = 13,
  GCOB_ERR_INTERNAL = 14
} gcob_status;

const char* gcob_status_name(gcob_status s);
const char* gcob_last_error(void);

typedef struct gcob_group gcob_group;
typedef struct gcob_catalog gcob_catalog;
typedef struct gcob_report gcob_report;
typedef struct gcob_checks gcob_checks;

void gcob_string_free(char* s);

/* ---- group construction ---- */

gcob_status gcob_group_cyclic(int n, gcob_group** out);
gcob_status gcob_group_dihedral(int n, gcob_group** out);   /* order 2n */
gcob_status gcob_group_dicyclic(int n, gcob_group** out);   /* order 4n */
gcob_status gcob_group_elementary_abelian(int p, int n, gcob_group** out);
/* mul is row-major order*order, entries in [0, order). */
gcob_status gcob_group_from_table(const int* mul, int order, const char* name,
                                  gcob_group** out);
/* images is row-major ngens x npoints; each row a bijection on 0..npoints-1 */
gcob_status gcob_group_from_generators(const int* images, int ngens,
                                       int npoints, const char* name,
                                       gcob_group** out);
gcob_status gcob_group_direct_product(const gcob_group* a, const gcob_group* b,
                                      gcob_group** out);
/* spec: catalog name, family spec ("cyclic:12", "elemab:3,2", ...) or a path
 * to a catalog-format file. catalog may be NULL. */
gcob_status gcob_group_parse_spec(const char* spec, const gcob_catalog* catalog,
                                  gcob_group** out);
void gcob_group_free(gcob_group* g);

int gcob_group_order(const gcob_group* g);
const char* gcob_group_name(const gcob_group* g);
int gcob_group_mul(const gcob_group* g, int a, int b);
int gcob_group_inv(const gcob_group* g, int a);
/* [k,g] = k g k^-1 g^-1 */
int gcob_group_commutator(const gcob_group* g, int k, int gg);
int gcob_group_is_abelian(const gcob_group* g);
int gcob_group_conjugacy_class_count(const gcob_group* g);
int gcob_group_element_order(const gcob_group* g, int x);

/* ---- subgroup counting ---- */

gcob_status gcob_count_subgroups(const gcob_group* g, int64_t* out);
gcob_status gcob_count_abelian_subgroups(const gcob_group* g, int64_t* out);
gcob_status gcob_count_cyclic_subgroups(const gcob_group* g, int64_t* out);
gcob_status gcob_commuting_pairs_count(const gcob_group* g, int64_t* out);

/* ---- the invariant ---- */

#define GCOB_DEFAULT_BUDGET (UINT64_C(1) << 32)

/* budget 0 means the default; threads <= 1 means sequential. */
gcob_status gcob_r_n(const gcob_group* g, int genus, uint64_t budget,
                     int threads, int64_t* out);
gcob_status gcob_g_n_size(const gcob_group* g, int genus, uint64_t budget,
                          int64_t* out);
/* "component <root-index> size=<s>" lines, ascending root; free the string */
gcob_status gcob_components_text(const gcob_group* g, int genus,
                                 uint64_t budget, int threads, char** out);
/* Euclidean canonical divisor of a commuting pair over Z_n */
gcob_status gcob_cyclic_canonical(int n, int g, int k, int* out);
/* 1 if the shipped commutator convention passes the move-closure audit */
int gcob_convention_audit_passed(void);
/* human-readable audit summary; free the string */
char* gcob_convention_audit_summary(void);

/* ---- closed forms (exact integer arithmetic) ---- */

gcob_status gcob_tau(int64_t n, int64_t* out);
gcob_status gcob_sigma(int64_t n, int64_t* out);
gcob_status gcob_jordan2(int64_t n, int64_t* out);
gcob_status gcob_r1_cyclic(int64_t n, int64_t* out);
gcob_status gcob_r1_dihedral(int64_t n, int64_t* out);
gcob_status gcob_r1_dicyclic(int64_t n, int64_t* out);
/* GCOB_ERR_OVERFLOW if the exact value exceeds int64 */
gcob_status gcob_r1_elementary_abelian(int64_t p, int64_t n, int64_t* out);
gcob_status gcob_f_recurrence(int64_t p, int64_t n, int64_t* out);
gcob_status gcob_subgroup_count_dihedral(int64_t n, int64_t* out);
gcob_status gcob_subgroup_count_dicyclic(int64_t n, int64_t* out);

/* ---- catalog ---- */

/* path NULL: $GCOB_CATALOG if set, else the embedded default catalog */
gcob_status gcob_catalog_open(const char* path, gcob_catalog** out);
void gcob_catalog_free(gcob_catalog* c);
int gcob_catalog_size(const gcob_catalog* c);
const char* gcob_catalog_name(const gcob_catalog* c, int idx);
int gcob_catalog_order(const gcob_catalog* c, int idx);
int gcob_catalog_declared_abelian(const gcob_catalog* c, int idx);
const char* gcob_catalog_note(const gcob_catalog* c, int idx);
/* key: "subgroups" | "abelian" | "r1"; returns 1 and fills out when the
 * entry carries that expected value, 0 otherwise */
int gcob_catalog_expected(const gcob_catalog* c, int idx, const char* key,
                          int64_t* out);
/* annotation key: "subgroups" | "r1"; returns the "+k" suffix or "" */
const char* gcob_catalog_annotation(const gcob_catalog* c, int idx,
                                    const char* key);
gcob_status gcob_catalog_build(const gcob_catalog* c, const char* name,
                               gcob_group** out);
/* NULL when healthy, else a newline-separated problem list; free it */
char* gcob_catalog_self_test(const gcob_catalog* c);

/* ---- reports ---- */

typedef struct gcob_report_options {
  int genus_max;       /* >= 1 */
  uint64_t budget;     /* 0 = default */
  int threads;         /* <= 1 = sequential */
  int diagnostics;     /* include discarded-move counters in text output */
} gcob_report_options;

gcob_status gcob_report_compute(const gcob_catalog* catalog, const char* spec,
                                const gcob_report_options* opt,
                                gcob_report** out);
void gcob_report_free(gcob_report* r);

const char* gcob_report_name(const gcob_report* r);
int gcob_report_order(const gcob_report* r);
int gcob_report_abelian(const gcob_report* r);
int gcob_report_all_match(const gcob_report* r);
const char* gcob_report_error(const gcob_report* r); /* "" if none */
const char* gcob_report_convention(const gcob_report* r);
int gcob_report_audit_passed(const gcob_report* r);
const char* gcob_report_note(const gcob_report* r);

/* cells: "subgroups" | "abelian_subgroups" | "cyclic_subgroups" |
 * "commuting_pairs". field: "value" | "closed_form" | "expected".
 * Returns 1 and fills out when present. */
int gcob_report_cell(const gcob_report* r, const char* cell, const char* field,
                     int64_t* out);
/* method string of a cell: "brute-force" | "closed-form" | "both-agree" |
 * "MISMATCH" */
const char* gcob_report_cell_method(const gcob_report* r, const char* cell);
double gcob_report_cell_ms(const gcob_report* r, const char* cell);
int gcob_report_cell_match(const gcob_report* r, const char* cell);
const char* gcob_report_annotation(const gcob_report* r, const char* cell);

int gcob_report_genus_count(const gcob_report* r);
/* field: "value" | "closed_form" | "expected" | "vertices" |
 * "discarded_minimality" | "discarded_total" */
int gcob_report_r(const gcob_report* r, int genus, const char* field,
                  int64_t* out);
const char* gcob_report_r_method(const gcob_report* r, int genus);
double gcob_report_r_ms(const gcob_report* r, int genus);
int gcob_report_r_match(const gcob_report* r, int genus);

/* ---- verification suites ---- */

/* level: "quick" | "full" */
gcob_status gcob_verify_run(const gcob_catalog* catalog, const char* level,
                            int threads, int diagnostics, gcob_checks** out);
void gcob_checks_free(gcob_checks* c);
int gcob_checks_size(const gcob_checks* c);
const char* gcob_checks_name(const gcob_checks* c, int idx);
int gcob_checks_passed(const gcob_checks* c, int idx);
int gcob_checks_diagnostic(const gcob_checks* c, int idx);
const char* gcob_checks_detail(const gcob_checks* c, int idx);
int gcob_checks_all_passed(const gcob_checks* c);

#ifdef __cplusplus
}
#endif

#endif /* GCOB_H */
