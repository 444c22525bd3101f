#include "invariant.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "catalog.hpp"
#include "closed_forms.hpp"

namespace gcob {

namespace {

using Buf = std::vector<int>;  // 2n entries, handle i at [2i], [2i+1]

int bracket_buf(const FiniteGroup& g, BracketConvention c, const int* h) {
  return bracket(g, c, h[1], h[0]);
}

bool buf_is_minimal(const FiniteGroup& g, BracketConvention conv,
                    const int* buf, int n) {
  int p = 0;
  for (int i = 0; i < n; ++i) {
    p = g.mul(p, bracket_buf(g, conv, buf + 2 * i));
    if (i + 1 < n && p == 0) return false;
  }
  return p == 0;
}

int buf_total(const FiniteGroup& g, BracketConvention conv, const int* buf,
              int n) {
  int p = 0;
  for (int i = 0; i < n; ++i) p = g.mul(p, bracket_buf(g, conv, buf + 2 * i));
  return p;
}

SeqIndex encode_buf(const FiniteGroup& g, const int* buf, int n) {
  SeqIndex v = 0;
  for (int i = 0; i < 2 * n; ++i) v = v * g.order() + buf[i];
  return v;
}

void decode_buf(const FiniteGroup& g, int genus, SeqIndex idx, int* buf) {
  for (int i = 2 * genus - 1; i >= 0; --i) {
    buf[i] = static_cast<int>(idx % g.order());
    idx /= g.order();
  }
}

enum MoveId { kMove1a, kMove1b, kMove2a, kMove2b };

// In-place rewrite at handle i (and i+1 for the interchange moves). The
// exponent for the twist move is fixed at 1; higher powers are paths.
void apply_move(const FiniteGroup& G, BracketConvention conv, int* s, int i,
                MoveId move, int m = 1) {
  int g = s[2 * i], k = s[2 * i + 1];
  switch (move) {
    case kMove1a: {
      int p = k;
      int step = m >= 0 ? g : G.inv(g);
      for (int t = std::abs(m); t > 0; --t) p = G.mul(p, step);
      s[2 * i + 1] = p;
      break;
    }
    case kMove1b:
      s[2 * i] = G.mul(G.mul(g, k), G.inv(g));
      s[2 * i + 1] = G.inv(g);
      break;
    case kMove2a: {
      int gj = s[2 * i + 2], kj = s[2 * i + 3];
      s[2 * i] = G.mul(bracket(G, conv, g, k), gj);
      s[2 * i + 1] = kj;
      s[2 * i + 2] = G.mul(G.mul(kj, g), G.inv(kj));
      s[2 * i + 3] = G.mul(G.mul(kj, k), G.inv(kj));
      break;
    }
    case kMove2b: {
      // Exact inverse of the clockwise interchange.
      int gj = s[2 * i + 2], kj = s[2 * i + 3];
      int ki = G.inv(k);
      s[2 * i] = G.mul(G.mul(ki, gj), k);
      s[2 * i + 1] = G.mul(G.mul(ki, kj), k);
      s[2 * i + 2] = G.mul(G.mul(G.mul(ki, bracket(G, conv, kj, gj)), k), g);
      s[2 * i + 3] = k;
      break;
    }
  }
}

// Sequence-index membership with O(1) id lookup. Dense bitmap with a rank
// directory while the state space fits; sorted-vector binary search above.
class SequenceIndexSet {
 public:
  SequenceIndexSet(std::vector<SeqIndex> sorted, std::uint64_t space)
      : sorted_(std::move(sorted)) {
    static constexpr std::uint64_t kDenseLimit = std::uint64_t(1) << 26;
    dense_ = space <= kDenseLimit;
    if (dense_) {
      words_.assign((space + 63) / 64, 0);
      for (SeqIndex v : sorted_) words_[v >> 6] |= std::uint64_t(1) << (v & 63);
      rank_.assign(words_.size() + 1, 0);
      for (size_t w = 0; w < words_.size(); ++w)
        rank_[w + 1] = rank_[w] + std::popcount(words_[w]);
    }
  }

  // id of v among members (ascending), or -1.
  std::int64_t id_of(SeqIndex v) const {
    if (dense_) {
      std::uint64_t word = words_[v >> 6];
      if (!(word >> (v & 63) & 1)) return -1;
      std::uint64_t below = word & ((std::uint64_t(1) << (v & 63)) - 1);
      return static_cast<std::int64_t>(rank_[v >> 6] + std::popcount(below));
    }
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), v);
    if (it == sorted_.end() || *it != v) return -1;
    return it - sorted_.begin();
  }

  const std::vector<SeqIndex>& members() const { return sorted_; }

 private:
  std::vector<SeqIndex> sorted_;
  bool dense_ = false;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint32_t> rank_;
};

struct UnionFind {
  std::vector<std::int32_t> parent;
  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::int32_t find(std::int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct MoveListEntry {
  MoveId move;
  int index;
  int m = 1;
};

std::vector<MoveListEntry> move_list(int genus, int m_max = 1) {
  std::vector<MoveListEntry> out;
  for (int i = 0; i < genus; ++i) {
    for (int m = 1; m <= m_max; ++m) out.push_back({kMove1a, i, m});
    out.push_back({kMove1b, i});
  }
  for (int i = 0; i + 1 < genus; ++i) {
    out.push_back({kMove2a, i});
    out.push_back({kMove2b, i});
  }
  return out;
}

}  // namespace

SeqIndex encode_sequence(const FiniteGroup& g, const MinimalSequence& seq) {
  SeqIndex v = 0;
  for (const HandlePair& h : seq.handles) {
    v = v * g.order() + h.g;
    v = v * g.order() + h.k;
  }
  return v;
}

MinimalSequence decode_sequence(const FiniteGroup& g, int genus, SeqIndex idx) {
  MinimalSequence seq;
  seq.handles.resize(genus);
  Buf buf(2 * genus);
  decode_buf(g, genus, idx, buf.data());
  for (int i = 0; i < genus; ++i) seq.handles[i] = {buf[2 * i], buf[2 * i + 1]};
  return seq;
}

const char* convention_str(BracketConvention c) {
  switch (c) {
    case BracketConvention::kg_k1g1: return "k g k^-1 g^-1";
    case BracketConvention::k1g1_kg: return "k^-1 g^-1 k g";
    case BracketConvention::gk_g1k1: return "g k g^-1 k^-1";
    case BracketConvention::g1k1_gk: return "g^-1 k^-1 g k";
  }
  return "?";
}

ElementIndex bracket(const FiniteGroup& g, BracketConvention c,
                     ElementIndex k_arg, ElementIndex g_arg) {
  int k = k_arg, gg = g_arg;
  switch (c) {
    case BracketConvention::kg_k1g1:
      return g.mul(g.mul(g.mul(k, gg), g.inv(k)), g.inv(gg));
    case BracketConvention::k1g1_kg:
      return g.mul(g.mul(g.mul(g.inv(k), g.inv(gg)), k), gg);
    case BracketConvention::gk_g1k1:
      return g.mul(g.mul(g.mul(gg, k), g.inv(gg)), g.inv(k));
    case BracketConvention::g1k1_gk:
      return g.mul(g.mul(g.mul(g.inv(gg), g.inv(k)), gg), k);
  }
  return 0;
}

bool is_minimal_sequence(const FiniteGroup& g, const MinimalSequence& seq,
                         BracketConvention conv) {
  if (seq.handles.empty()) return false;
  Buf buf;
  buf.reserve(2 * seq.handles.size());
  for (const HandlePair& h : seq.handles) {
    buf.push_back(h.g);
    buf.push_back(h.k);
  }
  return buf_is_minimal(g, conv, buf.data(), seq.genus());
}

std::uint64_t checked_state_space(const FiniteGroup& g, int genus,
                                  std::uint64_t budget) {
  if (genus < 1) throw InvalidArgumentError("genus must be >= 1");
  // exact size in 128 bits; 2n factors of order <= 2^31 can overflow that
  // only for absurd genus, which the early bail below cuts off anyway
  Wide space = 1;
  bool over = false;
  for (int i = 0; i < 2 * genus && !over; ++i) {
    space *= static_cast<Wide>(g.order());
    if (space > (Wide(1) << 100)) over = true;
  }
  if (over || space > budget)
    throw BudgetExceededError(
        "state space |G|^(2n) = " +
        (over ? std::string("more than 2^100") : wide_str(space)) +
        " for |G|=" + std::to_string(g.order()) + ", n=" +
        std::to_string(genus) + " exceeds budget " + std::to_string(budget));
  return static_cast<std::uint64_t>(space);
}

std::vector<SeqIndex> enumerate_g_indices(const FiniteGroup& g, int genus,
                                          std::uint64_t budget,
                                          BracketConvention conv) {
  checked_state_space(g, genus, budget);
  const int n = g.order();
  // Pairs grouped by bracket value; each bucket ascends in (g,k), so the
  // final handle keeps the output in increasing SeqIndex order.
  std::vector<std::vector<std::pair<int, int>>> by_bracket(n);
  for (int gg = 0; gg < n; ++gg)
    for (int k = 0; k < n; ++k)
      by_bracket[bracket(g, conv, k, gg)].push_back({gg, k});

  std::vector<SeqIndex> out;
  Buf buf(2 * genus);
  // Depth-first over handles with prefix-product pruning.
  auto rec = [&](auto&& self, int depth, int prefix, SeqIndex idx) -> void {
    if (depth == genus - 1) {
      for (auto [gg, k] : by_bracket[g.inv(prefix)]) {
        out.push_back((idx * n + gg) * n + k);
      }
      return;
    }
    for (int gg = 0; gg < n; ++gg) {
      for (int k = 0; k < n; ++k) {
        int p = g.mul(prefix, bracket(g, conv, k, gg));
        if (p == 0) continue;  // proper prefix product must stay nontrivial
        self(self, depth + 1, p, (idx * n + gg) * n + k);
      }
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

std::vector<MinimalSequence> enumerate_g(const FiniteGroup& g, int genus,
                                         std::uint64_t budget) {
  std::vector<MinimalSequence> out;
  for (SeqIndex v : enumerate_g_indices(g, genus, budget))
    out.push_back(decode_sequence(g, genus, v));
  return out;
}

namespace {

std::optional<MinimalSequence> move_common(const FiniteGroup& g,
                                           const MinimalSequence& seq, int i,
                                           MoveId move, int m = 1) {
  int genus = seq.genus();
  int span = (move == kMove2a || move == kMove2b) ? 2 : 1;
  if (i < 0 || i + span > genus)
    throw IndexOutOfRangeError("move index " + std::to_string(i) +
                               " out of range for genus " +
                               std::to_string(genus));
  if (!is_minimal_sequence(g, seq))
    throw InvalidArgumentError("sequence is not a member of G(n)");
  Buf buf(2 * genus);
  for (int j = 0; j < genus; ++j) {
    buf[2 * j] = seq.handles[j].g;
    buf[2 * j + 1] = seq.handles[j].k;
  }
  apply_move(g, kDefaultConvention, buf.data(), i, move, m);
  if (!buf_is_minimal(g, kDefaultConvention, buf.data(), genus))
    return std::nullopt;
  MinimalSequence out;
  out.handles.resize(genus);
  for (int j = 0; j < genus; ++j) out.handles[j] = {buf[2 * j], buf[2 * j + 1]};
  return out;
}

}  // namespace

std::optional<MinimalSequence> move_1a(const FiniteGroup& g,
                                       const MinimalSequence& seq, int i,
                                       int m) {
  return move_common(g, seq, i, kMove1a, m);
}
std::optional<MinimalSequence> move_1b(const FiniteGroup& g,
                                       const MinimalSequence& seq, int i) {
  return move_common(g, seq, i, kMove1b);
}
std::optional<MinimalSequence> move_2a(const FiniteGroup& g,
                                       const MinimalSequence& seq, int i) {
  return move_common(g, seq, i, kMove2a);
}
std::optional<MinimalSequence> move_2b(const FiniteGroup& g,
                                       const MinimalSequence& seq, int i) {
  return move_common(g, seq, i, kMove2b);
}

namespace {

struct GraphScan {
  UnionFind uf;
  std::uint64_t discarded_minimality = 0;
  std::uint64_t discarded_total = 0;
  explicit GraphScan(size_t n) : uf(n) {}
};

// Applies every move at every index for vertices [lo,hi); emits edges either
// straight into the union-find (single thread) or into a buffer.
template <typename EmitEdge>
void scan_range(const FiniteGroup& g, BracketConvention conv, int genus,
                const SequenceIndexSet& set, size_t lo, size_t hi,
                const std::vector<MoveListEntry>& moves, EmitEdge&& emit,
                std::uint64_t& disc_min, std::uint64_t& disc_tot) {
  Buf buf(2 * genus), work(2 * genus);
  const auto& verts = set.members();
  for (size_t vid = lo; vid < hi; ++vid) {
    decode_buf(g, genus, verts[vid], buf.data());
    for (const auto& mv : moves) {
      std::copy(buf.begin(), buf.end(), work.begin());
      apply_move(g, conv, work.data(), mv.index, mv.move, mv.m);
      SeqIndex target = encode_buf(g, work.data(), genus);
      std::int64_t tid = set.id_of(target);
      if (tid >= 0) {
        emit(static_cast<std::int32_t>(vid), static_cast<std::int32_t>(tid));
      } else if (buf_total(g, conv, work.data(), genus) == 0) {
        ++disc_min;
      } else {
        ++disc_tot;
      }
    }
  }
}

GraphScan scan_graph(const FiniteGroup& g, int genus, const RnOptions& opt,
                     const SequenceIndexSet& set) {
  const auto& verts = set.members();
  GraphScan scan(verts.size());
  auto moves = move_list(genus, opt.m_max);
  int threads = std::max(1, opt.threads);
  if (threads == 1 || verts.size() < 4096) {
    scan_range(g, opt.convention, genus, set, 0, verts.size(), moves,
               [&](std::int32_t a, std::int32_t b) { scan.uf.unite(a, b); },
               scan.discarded_minimality, scan.discarded_total);
    return scan;
  }
  struct Shard {
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    std::uint64_t disc_min = 0, disc_tot = 0;
  };
  std::vector<Shard> shards(threads);
  std::vector<std::thread> pool;
  size_t chunk = (verts.size() + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    size_t lo = std::min(verts.size(), t * chunk);
    size_t hi = std::min(verts.size(), lo + chunk);
    pool.emplace_back([&, t, lo, hi] {
      scan_range(g, opt.convention, genus, set, lo, hi, moves,
                 [&](std::int32_t a, std::int32_t b) {
                   shards[t].edges.push_back({a, b});
                 },
                 shards[t].disc_min, shards[t].disc_tot);
    });
  }
  for (auto& th : pool) th.join();
  for (auto& sh : shards) {
    for (auto [a, b] : sh.edges) scan.uf.unite(a, b);
    scan.discarded_minimality += sh.disc_min;
    scan.discarded_total += sh.disc_tot;
  }
  return scan;
}

}  // namespace

RnResult r_n(const FiniteGroup& g, int genus, const RnOptions& opt) {
  std::uint64_t space = checked_state_space(g, genus, opt.budget);
  SequenceIndexSet set(enumerate_g_indices(g, genus, opt.budget, opt.convention),
                       space);
  GraphScan scan = scan_graph(g, genus, opt, set);
  RnResult res;
  res.vertex_count = set.members().size();
  res.discarded_minimality = scan.discarded_minimality;
  res.discarded_total = scan.discarded_total;
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(set.members().size());
       ++i)
    if (scan.uf.find(i) == i) ++res.components;
  return res;
}

std::vector<ComponentInfo> components(const FiniteGroup& g, int genus,
                                      const RnOptions& opt) {
  std::uint64_t space = checked_state_space(g, genus, opt.budget);
  SequenceIndexSet set(enumerate_g_indices(g, genus, opt.budget, opt.convention),
                       space);
  GraphScan scan = scan_graph(g, genus, opt, set);
  const auto& verts = set.members();
  // vertices ascend, so the first id seen per root carries the least index
  std::vector<std::int64_t> root_slot(verts.size(), -1);
  std::vector<ComponentInfo> out;
  for (size_t i = 0; i < verts.size(); ++i) {
    std::int32_t r = scan.uf.find(static_cast<std::int32_t>(i));
    if (root_slot[r] < 0) {
      root_slot[r] = static_cast<std::int64_t>(out.size());
      out.push_back({verts[i], 0});
    }
    ++out[root_slot[r]].size;
  }
  std::sort(out.begin(), out.end(),
            [](const ComponentInfo& a, const ComponentInfo& b) {
              return a.root < b.root;
            });
  return out;
}

std::string components_text(const FiniteGroup& g, int genus,
                            const RnOptions& opt) {
  std::ostringstream os;
  for (const ComponentInfo& c : components(g, genus, opt))
    os << "component " << c.root << " size=" << c.size << "\n";
  return os.str();
}

std::vector<MinimalSequence> orbit_of(const FiniteGroup& g, int genus,
                                      const MinimalSequence& seq,
                                      const RnOptions& opt) {
  checked_state_space(g, genus, opt.budget);
  if (seq.genus() != genus || !is_minimal_sequence(g, seq, opt.convention))
    throw InvalidArgumentError("orbit_of: sequence is not a member of G(n)");
  auto moves = move_list(genus);
  std::unordered_set<SeqIndex> visited;
  std::vector<SeqIndex> queue;
  Buf buf(2 * genus), work(2 * genus);
  SeqIndex start = encode_sequence(g, seq);
  visited.insert(start);
  queue.push_back(start);
  for (size_t head = 0; head < queue.size(); ++head) {
    decode_buf(g, genus, queue[head], buf.data());
    for (const auto& mv : moves) {
      std::copy(buf.begin(), buf.end(), work.begin());
      apply_move(g, opt.convention, work.data(), mv.index, mv.move);
      if (!buf_is_minimal(g, opt.convention, work.data(), genus)) continue;
      SeqIndex t = encode_buf(g, work.data(), genus);
      if (visited.insert(t).second) queue.push_back(t);
      // moves are undirected identifications, but BFS needs the reverse
      // applications too; 1a with m=-1 and the two interchanges cover them
    }
    // reverse of 1a (m = -1); 1b and the interchange pair are mutually inverse
    for (int i = 0; i < genus; ++i) {
      std::copy(buf.begin(), buf.end(), work.begin());
      apply_move(g, opt.convention, work.data(), i, kMove1a, -1);
      if (!buf_is_minimal(g, opt.convention, work.data(), genus)) continue;
      SeqIndex t = encode_buf(g, work.data(), genus);
      if (visited.insert(t).second) queue.push_back(t);
    }
  }
  std::vector<SeqIndex> sorted(visited.begin(), visited.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<MinimalSequence> out;
  out.reserve(sorted.size());
  for (SeqIndex v : sorted) out.push_back(decode_sequence(g, genus, v));
  return out;
}

int cyclic_canonical(int n, int g, int k) {
  if (n < 1) throw InvalidArgumentError("cyclic_canonical requires n >= 1");
  int d = std::gcd(std::gcd(((g % n) + n) % n, ((k % n) + n) % n), n);
  return d == 0 ? n : d;
}

MoveClosureStats check_move_closure(const FiniteGroup& g, int genus,
                                    std::uint64_t budget,
                                    BracketConvention conv) {
  MoveClosureStats stats;
  auto verts = enumerate_g_indices(g, genus, budget, conv);
  auto moves = move_list(genus);
  Buf buf(2 * genus), work(2 * genus);
  for (SeqIndex v : verts) {
    decode_buf(g, genus, v, buf.data());
    for (const auto& mv : moves) {
      std::copy(buf.begin(), buf.end(), work.begin());
      apply_move(g, conv, work.data(), mv.index, mv.move, mv.m);
      ++stats.applications;
      if (buf_total(g, conv, work.data(), genus) != 0)
        ++stats.relator_violations;
      else if (!buf_is_minimal(g, conv, work.data(), genus))
        ++stats.minimality_exits;
    }
  }
  return stats;
}

std::string ConventionAudit::summary() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << "[k,g]=" << convention_str(e.conv) << ": "
       << (e.passed ? "accepted"
                    : "rejected (" + std::to_string(e.violations) +
                          " relator violations)");
    if (&e != &entries.back()) os << "; ";
  }
  return os.str();
}

const ConventionAudit& convention_audit() {
  static ConventionAudit audit;
  static std::once_flag once;
  std::call_once(once, [] {
    // Small nonabelian groups; the symmetric group of order 6 is the
    // discriminating case (commutators of order 3).
    std::vector<FiniteGroup> groups;
    groups.push_back(dihedral(3));
    groups.push_back(dihedral(4));
    groups.push_back(dicyclic(2));
    groups.push_back(FiniteGroup::from_generators(
        {{1, 2, 0, 3}, {1, 0, 3, 2}}, "alt4"));
    for (int c = 0; c < 4; ++c) {
      auto conv = static_cast<BracketConvention>(c);
      ConventionAudit::Entry e{conv, true, 0, 0};
      for (const FiniteGroup& g : groups) {
        MoveClosureStats s = check_move_closure(g, 2, kDefaultBudget, conv);
        e.applications += s.applications;
        e.violations += s.relator_violations;
      }
      e.passed = e.violations == 0;
      audit.entries[c] = e;
    }
    audit.default_passed =
        audit.entries[static_cast<int>(kDefaultConvention)].passed;
  });
  return audit;
}

}  // namespace gcob
