#pragma once

#include <cstdint>
#include <optional>
#include <map>
#include <string>
#include <vector>

#include "group.hpp"

namespace gcob {

// Family builders. Dihedral and dicyclic groups are realized through
// permutation generators; cyclic and elementary-abelian ones directly as
// addition tables.
FiniteGroup cyclic(int n);
FiniteGroup dihedral(int n);             // order 2n
FiniteGroup dicyclic(int n);             // order 4n; dicyclic(2) = quaternion
FiniteGroup elementary_abelian(int p, int n,
                               int cap = FiniteGroup::kDefaultClosureCap);

enum class EntryKind { cyclic, dihedral, dicyclic, elemab, product, perms };

enum class Family { none, cyclic, dihedral, dicyclic, elementary_abelian };
struct FamilyInfo {
  Family family = Family::none;
  long long a = 0, b = 0;  // n, or (p, n) for the elementary-abelian family
};

struct CatalogExpected {
  std::optional<std::int64_t> subgroups;
  std::optional<std::int64_t> abelian_subgroups;
  std::optional<std::int64_t> r1;
  std::string note_subgroups;  // unresolved "+k" suffix from the source data
  std::string note_r1;
  bool any() const {
    return subgroups || abelian_subgroups || r1;
  }
};

struct CatalogEntry {
  std::string name;
  int order = 0;
  EntryKind kind = EntryKind::cyclic;
  long long p1 = 0, p2 = 0;                  // family parameters
  std::vector<std::string> product_factors;  // entry names or family specs
  int points = 0;
  std::vector<Perm> gens;
  std::vector<std::string> relations;  // words over a..z equal to identity
  bool declared_abelian = false;
  std::string note;
  CatalogExpected expected;
  int line = 0;
};

// Plain-text, line-oriented catalog of named groups. See
// docs/catalog-format.md for the grammar.
class Catalog {
 public:
  static Catalog from_text(const std::string& text, std::string origin);
  static Catalog from_file(const std::string& path);
  // GCOB_CATALOG env var overrides; otherwise the embedded default.
  static Catalog open_default();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(const std::string& name) const;  // resolves aliases
  std::vector<CatalogEntry> all_entries(int max_order) const;

  FiniteGroup build(const std::string& name) const;
  FiniteGroup build(const CatalogEntry& entry) const;
  FamilyInfo family_of(const CatalogEntry& entry) const;

  // Builds every entry and verifies: declared order, abelian flag, relation
  // words. Returns one message per problem; empty means healthy.
  std::vector<std::string> self_test() const;

  const std::string& origin() const { return origin_; }

 private:
  std::vector<CatalogEntry> entries_;
  std::map<std::string, int> by_name_;
  std::map<std::string, std::string> aliases_;
  std::string origin_;
};

// Group spec: a catalog name, a family spec ("cyclic:12", "dihedral:8",
// "dicyclic:5", "elemab:3,2"), or a path to a catalog-format file (first
// entry is built).
struct BuiltGroup {
  FiniteGroup group;
  FamilyInfo family;
  CatalogExpected expected;
  bool from_catalog = false;
};
BuiltGroup build_group_spec(const std::string& spec, const Catalog* catalog);

// Parses "(0,1,2)(3,4)" into a permutation on npoints points.
Perm parse_cycles(const std::string& text, int npoints);

}  // namespace gcob
