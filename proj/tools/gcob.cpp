// gcob CLI: reproduce the reference table, compute invariants for a single
// group, run the verification suites, list the catalog. Talks to the library
// exclusively through the C API.
#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "gcob.h"
#include "json.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

struct CatalogHandle {
  gcob_catalog* c = nullptr;
  ~CatalogHandle() { gcob_catalog_free(c); }
};

struct ReportHandle {
  gcob_report* r = nullptr;
  ~ReportHandle() { gcob_report_free(r); }
};

[[noreturn]] void die(const std::string& msg, int code = 2) {
  std::cerr << "gcob: " << msg << "\n";
  std::exit(code);
}

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", ms);
  return buf;
}

struct CommonOpts {
  int genus_max = 1;
  std::uint64_t budget = 0;  // 0 = library default
  int threads = 0;           // 0 = auto
  bool no_timing = false;
  bool diagnostics = false;
  bool huge_ack = false;
  std::string format = "md";
};

int effective_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// |G|^(2*genus) clamped to u64 max.
std::uint64_t state_space(int order, int genus) {
  unsigned __int128 space = 1;
  for (int i = 0; i < 2 * genus; ++i) {
    space *= static_cast<unsigned>(order);
    if (space > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(space);
}

// The genus >= 3 guard: beyond the default budget only with explicit consent.
std::uint64_t guard_huge(int order, int genus, const CommonOpts& o) {
  std::uint64_t budget = o.budget ? o.budget : GCOB_DEFAULT_BUDGET;
  std::uint64_t space = state_space(order, genus);
  if (genus >= 3 && space > GCOB_DEFAULT_BUDGET) {
    if (!o.huge_ack)
      die("state space " + std::to_string(space) + " for genus " +
              std::to_string(genus) +
              " exceeds the default budget; pass --i-know-this-is-huge "
              "(and optionally --budget) to proceed",
          2);
    if (budget < space) budget = space;
  }
  return budget;
}

// ---- report -> row cells ----

struct Cell {
  std::int64_t value = 0;
  std::string method;
  bool has_closed = false;
  std::int64_t closed = 0;
  bool has_expected = false;
  std::int64_t expected = 0;
  bool match = true;
  double ms = 0;
  std::string annotation;
};

Cell read_cell(const gcob_report* r, const char* name) {
  Cell c;
  gcob_report_cell(r, name, "value", &c.value);
  c.has_closed = gcob_report_cell(r, name, "closed_form", &c.closed) != 0;
  c.has_expected = gcob_report_cell(r, name, "expected", &c.expected) != 0;
  c.method = gcob_report_cell_method(r, name);
  c.match = gcob_report_cell_match(r, name) != 0;
  c.ms = gcob_report_cell_ms(r, name);
  c.annotation = gcob_report_annotation(r, name);
  return c;
}

Cell read_genus(const gcob_report* r, int genus) {
  Cell c;
  gcob_report_r(r, genus, "value", &c.value);
  c.has_closed = gcob_report_r(r, genus, "closed_form", &c.closed) != 0;
  c.has_expected = gcob_report_r(r, genus, "expected", &c.expected) != 0;
  c.method = gcob_report_r_method(r, genus);
  c.match = gcob_report_r_match(r, genus) != 0;
  c.ms = gcob_report_r_ms(r, genus);
  if (genus == 1) c.annotation = gcob_report_annotation(r, "r1");
  return c;
}

ordered_json cell_json(const Cell& c, bool timing) {
  ordered_json j;
  j["value"] = c.value;
  j["method"] = c.method;
  if (c.has_closed) j["closed_form"] = c.closed;
  if (c.has_expected) {
    j["expected"] = c.expected;
    j["match"] = c.match;
  }
  if (!c.annotation.empty()) j["annotation"] = c.annotation;
  if (timing) j["ms"] = c.ms;
  return j;
}

ordered_json report_json(const gcob_report* r, int genus_max, bool timing,
                         bool diagnostics) {
  ordered_json j;
  j["name"] = gcob_report_name(r);
  j["order"] = gcob_report_order(r);
  j["abelian"] = gcob_report_abelian(r) != 0;
  j["commutator_convention"] = gcob_report_convention(r);
  j["convention_audit_passed"] = gcob_report_audit_passed(r) != 0;
  std::string note = gcob_report_note(r);
  if (!note.empty()) j["note"] = note;
  j["subgroups"] = cell_json(read_cell(r, "subgroups"), timing);
  j["abelian_subgroups"] = cell_json(read_cell(r, "abelian_subgroups"), timing);
  j["cyclic_subgroups"] = cell_json(read_cell(r, "cyclic_subgroups"), timing);
  j["commuting_pairs"] = cell_json(read_cell(r, "commuting_pairs"), timing);
  ordered_json rs = ordered_json::array();
  for (int genus = 1; genus <= genus_max; ++genus) {
    std::int64_t dummy;
    if (!gcob_report_r(r, genus, "value", &dummy)) break;
    Cell c = read_genus(r, genus);
    ordered_json rj;
    rj["genus"] = genus;
    rj["value"] = c.value;
    rj["method"] = c.method;
    if (c.has_closed) rj["closed_form"] = c.closed;
    if (c.has_expected) {
      rj["expected"] = c.expected;
      rj["match"] = c.match;
    }
    if (!c.annotation.empty()) rj["annotation"] = c.annotation;
    std::int64_t v;
    if (gcob_report_r(r, genus, "vertices", &v)) rj["sequences"] = v;
    if (diagnostics) {
      if (gcob_report_r(r, genus, "discarded_minimality", &v))
        rj["discarded_minimality"] = v;
      if (gcob_report_r(r, genus, "discarded_total", &v))
        rj["discarded_total"] = v;
    }
    if (timing) rj["ms"] = c.ms;
    rs.push_back(rj);
  }
  j["r"] = rs;
  std::string err = gcob_report_error(r);
  if (!err.empty()) j["error"] = err;
  j["all_match"] = gcob_report_all_match(r) != 0;
  return j;
}

// ---- table rendering ----

struct TableRow {
  std::vector<std::string> cols;
  bool ok = true;
  ordered_json json;
};

std::string match_str(const Cell& c) {
  if (!c.has_expected) return "n/a";
  return c.match ? "yes" : "NO";
}

TableRow render_row(const gcob_report* r, int genus_max, const CommonOpts& o) {
  TableRow row;
  row.ok = gcob_report_all_match(r) != 0;
  Cell sub = read_cell(r, "subgroups");
  Cell ab = read_cell(r, "abelian_subgroups");
  Cell cyc = read_cell(r, "cyclic_subgroups");
  Cell com = read_cell(r, "commuting_pairs");
  std::string err = gcob_report_error(r);
  row.cols = {gcob_report_name(r), std::to_string(gcob_report_order(r)),
              gcob_report_abelian(r) ? "yes" : "no"};
  auto cellcol = [&](const Cell& c) {
    return err.empty() ? std::to_string(c.value) : std::string("-");
  };
  row.cols.push_back(cellcol(sub));
  row.cols.push_back(cellcol(ab));
  row.cols.push_back(cellcol(cyc));
  row.cols.push_back(cellcol(com));
  double total_ms = sub.ms + ab.ms + cyc.ms + com.ms;
  for (int genus = 1; genus <= genus_max; ++genus) {
    std::int64_t v;
    if (err.empty() && gcob_report_r(r, genus, "value", &v)) {
      Cell c = read_genus(r, genus);
      std::string s = std::to_string(c.value);
      if (!c.annotation.empty() && o.diagnostics) s += "(" + c.annotation + ")";
      row.cols.push_back(s);
      if (genus == 1) row.cols.push_back(c.method);
      total_ms += c.ms;
    } else {
      row.cols.push_back("-");
      if (genus == 1) row.cols.push_back(err.empty() ? "?" : "error");
    }
  }
  Cell r1 = read_genus(r, 1);
  bool any_mismatch = !row.ok;
  row.cols.push_back(any_mismatch ? "NO" : (r1.has_expected || sub.has_expected
                                                ? "yes"
                                                : "n/a"));
  if (!o.no_timing) row.cols.push_back(fmt_ms(total_ms));
  row.json = report_json(r, genus_max, !o.no_timing, o.diagnostics);
  return row;
}

std::vector<std::string> table_header(int genus_max, const CommonOpts& o) {
  std::vector<std::string> h = {"name",   "order", "abelian", "subgroups",
                                "abelian_subgroups", "cyclic_subgroups",
                                "commuting_pairs"};
  for (int genus = 1; genus <= genus_max; ++genus) {
    h.push_back("r" + std::to_string(genus));
    if (genus == 1) h.push_back("r1_method");
  }
  h.push_back("match");
  if (!o.no_timing) h.push_back("ms");
  return h;
}

void print_md(const std::vector<std::string>& header,
              const std::vector<TableRow>& rows) {
  std::vector<size_t> width(header.size());
  for (size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (size_t i = 0; i < r.cols.size(); ++i)
      width[i] = std::max(width[i], r.cols[i].size());
  auto line = [&](const std::vector<std::string>& cols) {
    std::string out = "|";
    for (size_t i = 0; i < header.size(); ++i) {
      std::string v = i < cols.size() ? cols[i] : "";
      out += " " + v + std::string(width[i] - v.size(), ' ') + " |";
    }
    std::cout << out << "\n";
  };
  line(header);
  std::string sep = "|";
  for (size_t i = 0; i < header.size(); ++i)
    sep += std::string(width[i] + 2, '-') + "|";
  std::cout << sep << "\n";
  for (const auto& r : rows) line(r.cols);
}

void print_csv(const std::vector<std::string>& header,
               const std::vector<TableRow>& rows) {
  auto line = [&](const std::vector<std::string>& cols) {
    for (size_t i = 0; i < cols.size(); ++i)
      std::cout << cols[i] << (i + 1 < cols.size() ? "," : "");
    std::cout << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r.cols);
}

// ---- subcommands ----

int cmd_list(const CatalogHandle& cat) {
  int n = gcob_catalog_size(cat.c);
  std::printf("%-18s %-6s %-10s %s\n", "name", "order", "class", "note");
  for (int i = 0; i < n; ++i) {
    std::printf("%-18s %-6d %-10s %s\n", gcob_catalog_name(cat.c, i),
                gcob_catalog_order(cat.c, i),
                gcob_catalog_declared_abelian(cat.c, i) ? "abelian"
                                                        : "nonabelian",
                gcob_catalog_note(cat.c, i));
  }
  std::printf("%d entries\n", n);
  return 0;
}

int cmd_table(const CatalogHandle& cat, int max_order, const CommonOpts& o) {
  int n = gcob_catalog_size(cat.c);
  std::vector<int> picked;
  for (int i = 0; i < n; ++i)
    if (gcob_catalog_order(cat.c, i) <= max_order) picked.push_back(i);

  int pool = effective_threads(o.threads);
  std::vector<TableRow> rows(picked.size());
  std::vector<int> row_status(picked.size(), 0);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t slot = next.fetch_add(1);
      if (slot >= picked.size()) return;
      const char* name = gcob_catalog_name(cat.c, picked[slot]);
      int order = gcob_catalog_order(cat.c, picked[slot]);
      gcob_report_options ropt{};
      ropt.genus_max = o.genus_max;
      ropt.budget = guard_huge(order, o.genus_max, o);
      ropt.threads = 1;  // the pool parallelizes across groups
      ropt.diagnostics = o.diagnostics ? 1 : 0;
      ReportHandle rep;
      gcob_status st = gcob_report_compute(cat.c, name, &ropt, &rep.r);
      if (st != GCOB_OK) {
        row_status[slot] = st;
        continue;
      }
      rows[slot] = render_row(rep.r, o.genus_max, o);
    }
  };
  std::vector<std::thread> threads;
  for (int t = 0; t < pool; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  bool all_ok = true;
  for (size_t i = 0; i < picked.size(); ++i) {
    if (row_status[i] != 0) {
      std::cerr << "gcob: row " << gcob_catalog_name(cat.c, picked[i])
                << " failed: " << gcob_status_name((gcob_status)row_status[i])
                << "\n";
      all_ok = false;
    } else if (!rows[i].ok) {
      all_ok = false;
    }
  }
  std::vector<TableRow> good;
  for (size_t i = 0; i < picked.size(); ++i)
    if (row_status[i] == 0) good.push_back(std::move(rows[i]));

  if (o.format == "json") {
    ordered_json out;
    out["groups"] = ordered_json::array();
    for (auto& r : good) out["groups"].push_back(r.json);
    std::cout << out.dump(2) << "\n";
  } else if (o.format == "csv") {
    print_csv(table_header(o.genus_max, o), good);
  } else {
    print_md(table_header(o.genus_max, o), good);
  }
  if (!gcob_convention_audit_passed()) all_ok = false;
  return all_ok ? 0 : 1;
}

int cmd_compute(const CatalogHandle& cat, const std::string& spec,
                const CommonOpts& o, const std::string& components_path) {
  // peek at the order for the genus guard
  gcob_group* gtmp = nullptr;
  gcob_status st = gcob_group_parse_spec(spec.c_str(), cat.c, &gtmp);
  if (st != GCOB_OK) die(std::string(gcob_status_name(st)) + ": " +
                         gcob_last_error(), 2);
  int order = gcob_group_order(gtmp);

  gcob_report_options ropt{};
  ropt.genus_max = o.genus_max;
  ropt.budget = guard_huge(order, o.genus_max, o);
  ropt.threads = effective_threads(o.threads);
  ropt.diagnostics = o.diagnostics ? 1 : 0;
  ReportHandle rep;
  st = gcob_report_compute(cat.c, spec.c_str(), &ropt, &rep.r);
  if (st != GCOB_OK) {
    gcob_group_free(gtmp);
    die(std::string(gcob_status_name(st)) + ": " + gcob_last_error(), 2);
  }

  if (!components_path.empty()) {
    char* text = nullptr;
    st = gcob_components_text(gtmp, o.genus_max, ropt.budget, ropt.threads,
                              &text);
    if (st != GCOB_OK)
      die(std::string("components: ") + gcob_status_name(st) + ": " +
              gcob_last_error(),
          2);
    std::ofstream f(components_path);
    f << text;
    gcob_string_free(text);
  }
  gcob_group_free(gtmp);

  if (o.format == "json") {
    ordered_json out;
    out["groups"] = ordered_json::array();
    out["groups"].push_back(
        report_json(rep.r, o.genus_max, !o.no_timing, o.diagnostics));
    std::cout << out.dump(2) << "\n";
  } else {
    const gcob_report* r = rep.r;
    std::cout << "group " << gcob_report_name(r) << "  (order "
              << gcob_report_order(r) << ", "
              << (gcob_report_abelian(r) ? "abelian" : "nonabelian") << ")\n";
    std::cout << "commutator convention: [k,g] = " << gcob_report_convention(r)
              << "  (audit: "
              << (gcob_report_audit_passed(r) ? "pass" : "FAIL") << ")\n";
    auto show = [&](const char* label, const Cell& c) {
      std::cout << "  " << label << ": " << c.value << "  [" << c.method << "]";
      if (c.has_expected)
        std::cout << "  expected " << c.expected << " -> "
                  << (c.match ? "ok" : "MISMATCH");
      if (!c.annotation.empty())
        std::cout << "  (annotation " << c.annotation << ")";
      if (!o.no_timing) std::cout << "  " << fmt_ms(c.ms) << "ms";
      std::cout << "\n";
    };
    show("subgroups        ", read_cell(r, "subgroups"));
    show("abelian subgroups", read_cell(r, "abelian_subgroups"));
    show("cyclic subgroups ", read_cell(r, "cyclic_subgroups"));
    show("commuting pairs  ", read_cell(r, "commuting_pairs"));
    for (int genus = 1; genus <= o.genus_max; ++genus) {
      std::int64_t v;
      if (!gcob_report_r(r, genus, "value", &v)) break;
      Cell c = read_genus(r, genus);
      std::ostringstream label;
      label << "r_" << genus << "             ";
      show(label.str().substr(0, 17).c_str(), c);
      if (o.diagnostics) {
        std::int64_t seqs = 0, dm = 0, dt = 0;
        gcob_report_r(r, genus, "vertices", &seqs);
        gcob_report_r(r, genus, "discarded_minimality", &dm);
        gcob_report_r(r, genus, "discarded_total", &dt);
        std::cout << "      sequences " << seqs << ", moves discarded for minimality "
                  << dm << ", relator violations " << dt << "\n";
      }
    }
    std::string err = gcob_report_error(r);
    if (!err.empty()) std::cout << "error: " << err << "\n";
    std::cout << "result: "
              << (gcob_report_all_match(r) ? "MATCH" : "MISMATCH") << "\n";
  }
  return gcob_report_all_match(rep.r) ? 0 : 1;
}

int cmd_verify(const CatalogHandle& cat, const std::string& level,
               const CommonOpts& o) {
  gcob_checks* checks = nullptr;
  gcob_status st = gcob_verify_run(cat.c, level.c_str(),
                                   effective_threads(o.threads),
                                   o.diagnostics ? 1 : 0, &checks);
  if (st != GCOB_OK)
    die(std::string(gcob_status_name(st)) + ": " + gcob_last_error(), 2);
  int n = gcob_checks_size(checks);
  int failed = 0;
  for (int i = 0; i < n; ++i) {
    bool diag = gcob_checks_diagnostic(checks, i) != 0;
    bool pass = gcob_checks_passed(checks, i) != 0;
    const char* tag = diag ? "DIAG" : (pass ? "PASS" : "FAIL");
    if (!diag && !pass) ++failed;
    std::cout << tag << " " << gcob_checks_name(checks, i) << " - "
              << gcob_checks_detail(checks, i) << "\n";
  }
  bool ok = gcob_checks_all_passed(checks) != 0;
  std::cout << (ok ? "verify: all checks passed ("
                   : "verify: FAILURES (")
            << n << " checks, " << failed << " failed)\n";
  gcob_checks_free(checks);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genus-graded invariant of finite groups"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string catalog_path;  // env GCOB_CATALOG handled by the library

  int max_order = 30;
  auto* t = app.add_subcommand("table", "reproduce the reference table");
  t->add_option("--max-order", max_order, "largest group order to include");
  t->add_option("--genus-max", o.genus_max, "compute r_1..r_genus_max");
  t->add_option("--format", o.format, "md|csv|json")
      ->check(CLI::IsMember({"md", "csv", "json"}));
  t->add_option("--threads", o.threads, "worker pool size (0 = auto)");
  t->add_option("--budget", o.budget, "state-space budget override");
  t->add_flag("--no-timing", o.no_timing, "omit timing columns");
  t->add_flag("--diagnostics", o.diagnostics, "include annotation diagnostics");
  t->add_flag("--i-know-this-is-huge", o.huge_ack,
              "acknowledge state spaces beyond the default budget");

  std::string spec;
  std::string components_path;
  int genus = 1;
  auto* c = app.add_subcommand("compute", "invariants of one group");
  c->add_option("spec", spec,
                "catalog name, family spec (cyclic:12, dihedral:8, dicyclic:5, "
                "elemab:3,2) or path to a group file")
      ->required();
  c->add_option("--genus", genus, "compute r_1..r_genus");
  c->add_option("--format", o.format, "md|json")
      ->check(CLI::IsMember({"md", "json"}));
  c->add_option("--threads", o.threads, "threads for the component scan");
  c->add_option("--budget", o.budget, "state-space budget override");
  c->add_option("--components", components_path,
                "write the component golden file for the top genus");
  c->add_flag("--no-timing", o.no_timing, "omit timings");
  c->add_flag("--diagnostics", o.diagnostics, "show discarded-move counters");
  c->add_flag("--i-know-this-is-huge", o.huge_ack,
              "acknowledge state spaces beyond the default budget");

  std::string level = "quick";
  auto* v = app.add_subcommand("verify", "run the verification suites");
  v->add_option("level", level, "quick|full")
      ->check(CLI::IsMember({"quick", "full"}));
  v->add_option("--threads", o.threads, "worker pool size");
  v->add_flag("--diagnostics", o.diagnostics,
              "also report the annotation diagnostics");

  auto* l = app.add_subcommand("list", "list the catalog");
  (void)l;

  CLI11_PARSE(app, argc, argv);

  CatalogHandle cat;
  gcob_status st = gcob_catalog_open(nullptr, &cat.c);
  if (st != GCOB_OK)
    die(std::string("catalog: ") + gcob_status_name(st) + ": " +
            gcob_last_error(),
        2);

  if (app.got_subcommand("list")) return cmd_list(cat);
  if (app.got_subcommand("table")) return cmd_table(cat, max_order, o);
  if (app.got_subcommand("verify")) return cmd_verify(cat, level, o);
  if (app.got_subcommand("compute")) {
    o.genus_max = genus;
    return cmd_compute(cat, spec, o, components_path);
  }
  return 2;
}
