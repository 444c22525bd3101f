#include "catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "closed_forms.hpp"

namespace gcob {

namespace {

const char* kEmbeddedCatalog =
#include "catalog_text.inc"
    ;

}  // namespace

FiniteGroup cyclic(int n) {
  if (n < 1) throw InvalidArgumentError("cyclic requires n >= 1");
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = (i + j) % n;
  return FiniteGroup::from_table_flat(std::move(flat), n,
                                      "cyclic:" + std::to_string(n));
}

FiniteGroup dihedral(int n) {
  if (n < 1) throw InvalidArgumentError("dihedral requires n >= 1");
  std::string name = "dihedral:" + std::to_string(n);
  if (n == 1) return FiniteGroup::from_generators({{1, 0}}, name);
  if (n == 2) return FiniteGroup::from_generators({{1, 0, 2, 3}, {0, 1, 3, 2}}, name);
  Perm rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return FiniteGroup::from_generators({rot, refl}, name);
}

FiniteGroup dicyclic(int n) {
  if (n < 1) throw InvalidArgumentError("dicyclic requires n >= 1");
  // Left-regular permutations of <a,b | a^{2n}=1, b^2=a^n, b a b^-1 = a^-1>;
  // point i is a^i, point 2n+i is a^i b.
  int m = 2 * n;
  Perm pa(4 * n), pb(4 * n);
  for (int i = 0; i < m; ++i) {
    pa[i] = (i + 1) % m;
    pa[m + i] = m + (i + 1) % m;
    pb[i] = m + (m - i) % m;
    pb[m + i] = ((n - i) % m + m) % m;
  }
  return FiniteGroup::from_generators({pa, pb}, "dicyclic:" + std::to_string(n));
}

FiniteGroup elementary_abelian(int p, int n, int cap) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  if (n < 1) throw InvalidArgumentError("elementary_abelian requires n >= 1");
  long long order = 1;
  for (int i = 0; i < n; ++i) {
    order *= p;
    if (order > cap)
      throw ClosureCapError("elementary abelian group p^n exceeds cap " +
                            std::to_string(cap));
  }
  int no = static_cast<int>(order);
  auto add = [&](int a, int b) {
    int r = 0, mulp = 1;
    for (int d = 0; d < n; ++d) {
      r += ((a % p + b % p) % p) * mulp;
      a /= p;
      b /= p;
      mulp *= p;
    }
    return r;
  };
  std::vector<int> flat(static_cast<size_t>(no) * no);
  for (int i = 0; i < no; ++i)
    for (int j = 0; j < no; ++j) flat[static_cast<size_t>(i) * no + j] = add(i, j);
  return FiniteGroup::from_table_flat(
      std::move(flat), no, "elemab:" + std::to_string(p) + "," + std::to_string(n));
}

Perm parse_cycles(const std::string& text, int npoints) {
  Perm p = identity_perm(npoints);
  size_t i = 0;
  auto fail = [&](const std::string& m) {
    throw ParseError("cycle notation '" + text + "': " + m);
  };
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    size_t close = text.find(')', i);
    if (close == std::string::npos) fail("missing ')'");
    std::string body = text.substr(i + 1, close - i - 1);
    std::vector<int> cyc;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      int v = 0;
      try {
        v = std::stoi(tok);
      } catch (...) {
        fail("bad point '" + tok + "'");
      }
      if (v < 0 || v >= npoints) fail("point " + tok + " out of range");
      cyc.push_back(v);
    }
    for (size_t j = 0; j < cyc.size(); ++j)
      p[cyc[j]] = cyc[(j + 1) % cyc.size()];
    i = close + 1;
  }
  if (!is_valid_perm(p)) fail("cycles are not disjoint");
  return p;
}

namespace {

struct LineTokens {
  std::vector<std::string> toks;
  int line;
};

std::int64_t parse_int(const std::string& v, const std::string& ctx) {
  try {
    size_t pos = 0;
    std::int64_t r = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing");
    return r;
  } catch (...) {
    throw ParseError(ctx + ": expected integer, got '" + v + "'");
  }
}

// Evaluates a relation word like "b.a.b^-1.a^-5" over the given generator
// elements; returns the resulting group element.
int eval_word(const FiniteGroup& g, const std::vector<int>& gen_elems,
              const std::string& word, const std::string& ctx) {
  int acc = 0;
  std::stringstream ss(word);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    if (tok.empty()) throw ParseError(ctx + ": empty token in word '" + word + "'");
    char letter = tok[0];
    if (letter < 'a' || letter >= 'a' + static_cast<char>(gen_elems.size()))
      throw ParseError(ctx + ": unknown generator '" + std::string(1, letter) +
                       "' in word '" + word + "'");
    long long e = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^')
        throw ParseError(ctx + ": expected '^' in token '" + tok + "'");
      e = parse_int(tok.substr(2), ctx);
    }
    int base = gen_elems[letter - 'a'];
    if (e < 0) {
      base = g.inv(base);
      e = -e;
    }
    for (long long t = 0; t < e; ++t) acc = g.mul(acc, base);
  }
  return acc;
}

}  // namespace

Catalog Catalog::from_text(const std::string& text, std::string origin) {
  Catalog cat;
  cat.origin_ = std::move(origin);
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_version = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string ctx = cat.origin_ + ":" + std::to_string(lineno);
    // strip comments
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] == "catalog-version") {
      if (toks.size() != 2 || toks[1] != "1")
        throw ParseError(ctx + ": unsupported catalog version");
      saw_version = true;
      continue;
    }
    if (toks[0] == "alias") {
      if (toks.size() != 3)
        throw ParseError(ctx + ": alias needs two names");
      cat.aliases_[toks[1]] = toks[2];
      continue;
    }
    if (toks[0] != "entry")
      throw ParseError(ctx + ": expected 'entry', 'alias' or 'catalog-version', got '" +
                       toks[0] + "'");
    if (toks.size() < 2) throw ParseError(ctx + ": entry needs a name");
    CatalogEntry e;
    e.name = toks[1];
    e.line = lineno;
    if (cat.by_name_.count(e.name))
      throw ParseError(ctx + ": duplicate entry name '" + e.name + "'");
    bool have_kind = false, have_order = false, have_class = false;
    bool in_expected = false;
    std::string args, points_str;
    for (size_t i = 2; i < toks.size(); ++i) {
      const std::string& tok = toks[i];
      if (tok == "expected") {
        in_expected = true;
        continue;
      }
      size_t eq = tok.find('=');
      if (eq == std::string::npos)
        throw ParseError(ctx + ": expected key=value, got '" + tok + "'");
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (in_expected) {
        if (key == "subgroups") e.expected.subgroups = parse_int(val, ctx);
        else if (key == "abelian") e.expected.abelian_subgroups = parse_int(val, ctx);
        else if (key == "r1") e.expected.r1 = parse_int(val, ctx);
        else if (key == "note_subgroups") e.expected.note_subgroups = val;
        else if (key == "note_r1") e.expected.note_r1 = val;
        else throw ParseError(ctx + ": unknown expected key '" + key + "'");
        continue;
      }
      if (key == "order") {
        e.order = static_cast<int>(parse_int(val, ctx));
        have_order = true;
      } else if (key == "kind") {
        have_kind = true;
        if (val == "cyclic") e.kind = EntryKind::cyclic;
        else if (val == "dihedral") e.kind = EntryKind::dihedral;
        else if (val == "dicyclic") e.kind = EntryKind::dicyclic;
        else if (val == "elemab") e.kind = EntryKind::elemab;
        else if (val == "product") e.kind = EntryKind::product;
        else if (val == "perms") e.kind = EntryKind::perms;
        else throw ParseError(ctx + ": unknown kind '" + val + "'");
      } else if (key == "args") {
        args = val;
      } else if (key == "points") {
        points_str = val;
      } else if (key == "rels") {
        std::stringstream rs(val);
        std::string r;
        while (std::getline(rs, r, ';'))
          if (!r.empty()) e.relations.push_back(r);
      } else if (key == "class") {
        have_class = true;
        if (val == "abelian") e.declared_abelian = true;
        else if (val == "nonabelian") e.declared_abelian = false;
        else throw ParseError(ctx + ": class must be abelian|nonabelian");
      } else if (key == "note") {
        e.note = val;
      } else {
        throw ParseError(ctx + ": unknown key '" + key + "'");
      }
    }
    if (!have_kind) throw ParseError(ctx + ": entry lacks kind=");
    if (!have_order) throw ParseError(ctx + ": entry lacks order=");
    if (!have_class) throw ParseError(ctx + ": entry lacks class=");
    switch (e.kind) {
      case EntryKind::cyclic:
      case EntryKind::dihedral:
      case EntryKind::dicyclic:
        e.p1 = parse_int(args, ctx + " args");
        break;
      case EntryKind::elemab: {
        size_t comma = args.find(',');
        if (comma == std::string::npos)
          throw ParseError(ctx + ": elemab args need p,n");
        e.p1 = parse_int(args.substr(0, comma), ctx);
        e.p2 = parse_int(args.substr(comma + 1), ctx);
        break;
      }
      case EntryKind::product: {
        std::stringstream ps(args);
        std::string f;
        while (std::getline(ps, f, '*'))
          if (!f.empty()) e.product_factors.push_back(f);
        if (e.product_factors.size() < 2)
          throw ParseError(ctx + ": product needs at least two factors");
        // factors naming earlier entries must already exist
        for (const std::string& f : e.product_factors)
          if (f.find(':') == std::string::npos && !cat.by_name_.count(f))
            throw ParseError(ctx + ": product factor '" + f +
                             "' is not defined above this line");
        break;
      }
      case EntryKind::perms: {
        if (points_str.empty())
          throw ParseError(ctx + ": perms entry needs points=");
        e.points = static_cast<int>(parse_int(points_str, ctx));
        std::stringstream gs(args);
        std::string gstr;
        while (std::getline(gs, gstr, ';'))
          if (!gstr.empty()) e.gens.push_back(parse_cycles(gstr, e.points));
        if (e.gens.empty())
          throw ParseError(ctx + ": perms entry needs at least one generator");
        break;
      }
    }
    cat.by_name_[e.name] = static_cast<int>(cat.entries_.size());
    cat.entries_.push_back(std::move(e));
  }
  if (!saw_version)
    throw ParseError(cat.origin_ + ": missing catalog-version line");
  for (const auto& [from, to] : cat.aliases_)
    if (!cat.by_name_.count(to))
      throw ParseError(cat.origin_ + ": alias '" + from +
                       "' points at unknown entry '" + to + "'");
  return cat;
}

Catalog Catalog::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open catalog file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str(), path);
}

Catalog Catalog::open_default() {
  if (const char* env = std::getenv("GCOB_CATALOG"); env && *env)
    return from_file(env);
  return from_text(kEmbeddedCatalog, "<builtin>");
}

const CatalogEntry* Catalog::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) {
    auto al = aliases_.find(name);
    if (al == aliases_.end()) return nullptr;
    it = by_name_.find(al->second);
    if (it == by_name_.end()) return nullptr;
  }
  return &entries_[it->second];
}

std::vector<CatalogEntry> Catalog::all_entries(int max_order) const {
  std::vector<CatalogEntry> out;
  for (const auto& e : entries_)
    if (e.order <= max_order) out.push_back(e);
  return out;
}

FiniteGroup Catalog::build(const std::string& name) const {
  const CatalogEntry* e = find(name);
  if (!e) throw UnknownGroupError("unknown group '" + name + "'");
  return build(*e);
}

FiniteGroup Catalog::build(const CatalogEntry& e) const {
  FiniteGroup g = [&]() -> FiniteGroup {
    switch (e.kind) {
      case EntryKind::cyclic: return cyclic(static_cast<int>(e.p1));
      case EntryKind::dihedral: return dihedral(static_cast<int>(e.p1));
      case EntryKind::dicyclic: return dicyclic(static_cast<int>(e.p1));
      case EntryKind::elemab:
        return elementary_abelian(static_cast<int>(e.p1), static_cast<int>(e.p2));
      case EntryKind::product: {
        BuiltGroup acc = build_group_spec(e.product_factors[0], this);
        FiniteGroup prod = std::move(acc.group);
        for (size_t i = 1; i < e.product_factors.size(); ++i) {
          BuiltGroup f = build_group_spec(e.product_factors[i], this);
          prod = FiniteGroup::direct_product(prod, f.group);
        }
        return prod;
      }
      case EntryKind::perms:
        return FiniteGroup::from_generators(e.gens, e.name);
    }
    throw InvalidArgumentError("bad entry kind");
  }();
  if (g.order() != e.order)
    throw OrderMismatchError("entry '" + e.name + "' declares order " +
                             std::to_string(e.order) + " but builds order " +
                             std::to_string(g.order()));
  return g;
}

FamilyInfo Catalog::family_of(const CatalogEntry& e) const {
  switch (e.kind) {
    case EntryKind::cyclic: return {Family::cyclic, e.p1, 0};
    case EntryKind::dihedral: return {Family::dihedral, e.p1, 0};
    case EntryKind::dicyclic: return {Family::dicyclic, e.p1, 0};
    case EntryKind::elemab: return {Family::elementary_abelian, e.p1, e.p2};
    default: return {};
  }
}

std::vector<std::string> Catalog::self_test() const {
  std::vector<std::string> problems;
  for (const auto& e : entries_) {
    try {
      FiniteGroup g = build(e);
      if (g.is_abelian() != e.declared_abelian)
        problems.push_back("entry '" + e.name + "': class= flag disagrees with table");
      if (!e.relations.empty() && e.kind == EntryKind::perms) {
        std::vector<int> gen_elems;
        FiniteGroup g2 = FiniteGroup::from_generators(
            e.gens, e.name, FiniteGroup::kDefaultClosureCap, &gen_elems);
        for (const std::string& w : e.relations) {
          int v = eval_word(g2, gen_elems, w, "entry '" + e.name + "'");
          if (v != 0)
            problems.push_back("entry '" + e.name + "': relation '" + w +
                               "' does not hold");
        }
      }
    } catch (const Error& err) {
      problems.push_back("entry '" + e.name + "': " + err.what());
    }
  }
  return problems;
}

BuiltGroup build_group_spec(const std::string& spec, const Catalog* catalog) {
  size_t colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string fam = spec.substr(0, colon), rest = spec.substr(colon + 1);
    auto ctx = "group spec '" + spec + "'";
    if (fam == "cyclic") {
      long long n = parse_int(rest, ctx);
      return {cyclic(static_cast<int>(n)), {Family::cyclic, n, 0}, {}, false};
    }
    if (fam == "dihedral") {
      long long n = parse_int(rest, ctx);
      return {dihedral(static_cast<int>(n)), {Family::dihedral, n, 0}, {}, false};
    }
    if (fam == "dicyclic") {
      long long n = parse_int(rest, ctx);
      return {dicyclic(static_cast<int>(n)), {Family::dicyclic, n, 0}, {}, false};
    }
    if (fam == "elemab") {
      size_t comma = rest.find(',');
      if (comma == std::string::npos)
        throw ParseError(ctx + ": elemab needs p,n");
      long long p = parse_int(rest.substr(0, comma), ctx);
      long long n = parse_int(rest.substr(comma + 1), ctx);
      return {elementary_abelian(static_cast<int>(p), static_cast<int>(n)),
              {Family::elementary_abelian, p, n},
              {},
              false};
    }
    // fall through: names may contain ':', e.g. "Z_7:Z_3"
  }
  if (catalog) {
    if (const CatalogEntry* e = catalog->find(spec)) {
      return {catalog->build(*e), catalog->family_of(*e), e->expected, true};
    }
  }
  // last resort: a path to a catalog-format file
  {
    std::ifstream probe(spec);
    if (probe) {
      Catalog file_cat = Catalog::from_file(spec);
      if (file_cat.entries().empty())
        throw ParseError("group file '" + spec + "' defines no entries");
      const CatalogEntry& e = file_cat.entries().front();
      return {file_cat.build(e), file_cat.family_of(e), e.expected, false};
    }
  }
  throw UnknownGroupError("unknown group spec '" + spec + "'");
}

}  // namespace gcob
