#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "group.hpp"

namespace gcob {

// One handle of a genus-n monodromy datum.
struct HandlePair {
  ElementIndex g = 0;
  ElementIndex k = 0;
  friend bool operator==(const HandlePair&, const HandlePair&) = default;
};

// (g_1,k_1,...,g_n,k_n) with trivial total commutator product and no trivial
// proper prefix product.
struct MinimalSequence {
  std::vector<HandlePair> handles;
  int genus() const { return static_cast<int>(handles.size()); }
  friend bool operator==(const MinimalSequence&, const MinimalSequence&) = default;
};

// Mixed-radix encoding of the 2n element indices, handle-major, g before k;
// sequences compare like their tuples.
using SeqIndex = std::uint64_t;

SeqIndex encode_sequence(const FiniteGroup& g, const MinimalSequence& seq);
MinimalSequence decode_sequence(const FiniteGroup& g, int genus, SeqIndex idx);

// The four commutator-convention candidates; index 0 ships as the default.
enum class BracketConvention : int {
  kg_k1g1 = 0,  // k g k^-1 g^-1
  k1g1_kg = 1,  // k^-1 g^-1 k g
  gk_g1k1 = 2,  // g k g^-1 k^-1
  g1k1_gk = 3,  // g^-1 k^-1 g k
};
inline constexpr BracketConvention kDefaultConvention = BracketConvention::kg_k1g1;
const char* convention_str(BracketConvention c);

ElementIndex bracket(const FiniteGroup& g, BracketConvention c,
                     ElementIndex k_arg, ElementIndex g_arg);

bool is_minimal_sequence(const FiniteGroup& g, const MinimalSequence& seq,
                         BracketConvention conv = kDefaultConvention);

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 32;

// |G|^(2*genus), guarded against the budget. Throws BudgetExceededError with
// the exact state-space size.
std::uint64_t checked_state_space(const FiniteGroup& g, int genus,
                                  std::uint64_t budget);

// Members of G(genus), each exactly once, ascending SeqIndex.
std::vector<SeqIndex> enumerate_g_indices(const FiniteGroup& g, int genus,
                                          std::uint64_t budget = kDefaultBudget,
                                          BracketConvention conv = kDefaultConvention);
std::vector<MinimalSequence> enumerate_g(const FiniteGroup& g, int genus,
                                         std::uint64_t budget = kDefaultBudget);

// Identification moves. Index i is 0-based; 2a/2b need i+1 < genus. The
// rewritten sequence is returned only when it lies in G(n) again.
std::optional<MinimalSequence> move_1a(const FiniteGroup& g,
                                       const MinimalSequence& seq, int i,
                                       int m = 1);
std::optional<MinimalSequence> move_1b(const FiniteGroup& g,
                                       const MinimalSequence& seq, int i);
std::optional<MinimalSequence> move_2a(const FiniteGroup& g,
                                       const MinimalSequence& seq, int i);
std::optional<MinimalSequence> move_2b(const FiniteGroup& g,
                                       const MinimalSequence& seq, int i);

struct RnOptions {
  std::uint64_t budget = kDefaultBudget;
  int threads = 1;
  BracketConvention convention = kDefaultConvention;
  // Edges for the twist move use exponents 1..m_max. The default relies on
  // path composition; larger values only add redundant edges (checked by the
  // m-generation property).
  int m_max = 1;
};

struct RnResult {
  std::int64_t components = 0;
  std::uint64_t vertex_count = 0;       // |G(n)|
  std::uint64_t discarded_minimality = 0;  // move output left G(n): no edge
  std::uint64_t discarded_total = 0;       // move output broke the relator (expect 0)
};

// Connected components of the graph on G(genus) with edges from all moves at
// all indices (exponent m = 1 only; larger m is path composition).
RnResult r_n(const FiniteGroup& g, int genus, const RnOptions& opt = {});

struct ComponentInfo {
  SeqIndex root = 0;  // smallest member index, the canonical representative
  std::uint64_t size = 0;
};
std::vector<ComponentInfo> components(const FiniteGroup& g, int genus,
                                      const RnOptions& opt = {});
// One line per component: "component <root-index> size=<s>", ascending root.
std::string components_text(const FiniteGroup& g, int genus,
                            const RnOptions& opt = {});

// Connected component of seq, BFS, ascending index order.
std::vector<MinimalSequence> orbit_of(const FiniteGroup& g, int genus,
                                      const MinimalSequence& seq,
                                      const RnOptions& opt = {});

// Euclidean canonical form of a genus-one pair over Z_n: the divisor d of n
// with <d> = <g,k>; (0,0) maps to n (the trivial subgroup).
int cyclic_canonical(int n, int g, int k);

// Exhaustive move-closure scan of G(genus): applies every move at every
// index to every member and classifies the outputs.
struct MoveClosureStats {
  std::uint64_t applications = 0;
  std::uint64_t relator_violations = 0;  // total product broke (expect 0)
  std::uint64_t minimality_exits = 0;    // left G(n): legal, just no edge
};
MoveClosureStats check_move_closure(const FiniteGroup& g, int genus,
                                    std::uint64_t budget = kDefaultBudget,
                                    BracketConvention conv = kDefaultConvention);

// Convention audit: runs all four candidates against move closure on
// exhaustive G(2) of a fixed set of small nonabelian groups.
struct ConventionAudit {
  struct Entry {
    BracketConvention conv;
    bool passed = false;
    std::uint64_t violations = 0;
    std::uint64_t applications = 0;
  };
  std::array<Entry, 4> entries;
  bool default_passed = false;
  std::string summary() const;
};
const ConventionAudit& convention_audit();  // cached across calls

}  // namespace gcob
