#include "group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace gcob {

bool is_valid_perm(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Perm identity_perm(int npoints) {
  Perm p(npoints);
  for (int i = 0; i < npoints; ++i) p[i] = i;
  return p;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

namespace {

std::string triple_str(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

void validate_table(const std::vector<int>& mul, int n, const std::string& name) {
  auto fail = [&](const std::string& what) {
    throw NotAGroupError("group '" + name + "': " + what);
  };
  if (n <= 0) fail("empty table");
  // Latin square: every row and column is a permutation of {0..n-1}.
  std::vector<bool> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (int b = 0; b < n; ++b) {
      int v = mul[static_cast<size_t>(a) * n + b];
      if (v < 0 || v >= n) fail("entry out of range at row " + std::to_string(a));
      if (seen[v]) fail("row " + std::to_string(a) + " is not a bijection");
      seen[v] = true;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), false);
    for (int a = 0; a < n; ++a) {
      int v = mul[static_cast<size_t>(a) * n + b];
      if (seen[v]) fail("column " + std::to_string(b) + " is not a bijection");
      seen[v] = true;
    }
  }
  // Associativity: exhaustive for small orders, deterministic sample above.
  auto at = [&](int a, int b) { return mul[static_cast<size_t>(a) * n + b]; };
  if (n <= 128) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            fail("associativity fails at " + triple_str(a, b, c));
  } else {
    std::mt19937 rng(0x9e3779b9u);  // fixed seed, deterministic check
    std::uniform_int_distribution<int> d(0, n - 1);
    for (int t = 0; t < 300000; ++t) {
      int a = d(rng), b = d(rng), c = d(rng);
      if (at(at(a, b), c) != at(a, at(b, c)))
        fail("associativity fails at " + triple_str(a, b, c));
    }
  }
}

int find_identity(const std::vector<int>& mul, int n) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = mul[static_cast<size_t>(e) * n + x] == x &&
           mul[static_cast<size_t>(x) * n + e] == x;
    if (ok) return e;
  }
  return -1;
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::string name)
    : order_(order), mul_(std::move(table)), name_(std::move(name)) {
  inv_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mul_[static_cast<size_t>(a) * order_ + b] == 0) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0 || mul_[static_cast<size_t>(inv_[a]) * order_ + a] != 0)
      throw NotAGroupError("group '" + name_ + "': element " +
                           std::to_string(a) + " has no two-sided inverse");
  }
  abelian_ = true;
  for (int a = 0; a < order_ && abelian_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }
}

FiniteGroup FiniteGroup::from_table_flat(std::vector<int> flat, int order,
                                         std::string name) {
  if (order <= 0 || flat.size() != static_cast<size_t>(order) * order)
    throw NotAGroupError("group '" + name + "': table is not order x order");
  validate_table(flat, order, name);
  int e = find_identity(flat, order);
  if (e < 0)
    throw NotAGroupError("group '" + name + "': no two-sided identity");
  if (e != 0) {
    // Relabel by the transposition 0 <-> e.
    auto relab = [&](int x) { return x == 0 ? e : (x == e ? 0 : x); };
    std::vector<int> out(flat.size());
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        out[static_cast<size_t>(relab(a)) * order + relab(b)] =
            relab(flat[static_cast<size_t>(a) * order + b]);
    flat = std::move(out);
  }
  return FiniteGroup(order, std::move(flat), std::move(name));
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& rows,
                                    std::string name) {
  int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw NotAGroupError("group '" + name + "': table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_table_flat(std::move(flat), n, std::move(name));
}

FiniteGroup FiniteGroup::from_generators(const std::vector<Perm>& gens,
                                         std::string name, int cap,
                                         std::vector<int>* gen_elements) {
  int npoints = gens.empty() ? 1 : static_cast<int>(gens[0].size());
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != npoints)
      throw InvalidArgumentError("generators act on different point sets");
    if (!is_valid_perm(g))
      throw InvalidArgumentError("generator is not a permutation");
  }
  std::vector<Perm> elems;
  std::map<Perm, int> index;
  elems.push_back(identity_perm(npoints));
  index[elems[0]] = 0;
  // BFS discovery order, generators applied in listed order.
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Perm y = compose(elems[head], g);
      if (index.emplace(y, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(y));
        if (static_cast<int>(elems.size()) > cap)
          throw ClosureCapError("closure of '" + name + "' exceeds cap " +
                                std::to_string(cap));
      }
    }
  }
  int n = static_cast<int>(elems.size());
  if (gen_elements) {
    gen_elements->clear();
    for (const auto& g : gens) gen_elements->push_back(index.at(g));
  }
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  return from_table_flat(std::move(flat), n, std::move(name));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g,
                                        const FiniteGroup& h, std::string name,
                                        int cap) {
  long long n = static_cast<long long>(g.order()) * h.order();
  if (n > cap)
    throw ClosureCapError("direct product order " + std::to_string(n) +
                          " exceeds cap " + std::to_string(cap));
  int ng = g.order(), nh = h.order(), no = static_cast<int>(n);
  if (name.empty()) name = g.name() + "x" + h.name();
  std::vector<int> flat(static_cast<size_t>(no) * no);
  for (int a1 = 0; a1 < ng; ++a1)
    for (int b1 = 0; b1 < nh; ++b1)
      for (int a2 = 0; a2 < ng; ++a2)
        for (int b2 = 0; b2 < nh; ++b2)
          flat[static_cast<size_t>(a1 * nh + b1) * no + (a2 * nh + b2)] =
              g.mul(a1, a2) * nh + h.mul(b1, b2);
  return from_table_flat(std::move(flat), no, std::move(name));
}

int FiniteGroup::conjugacy_class_count() const {
  std::vector<bool> seen(order_, false);
  int classes = 0;
  for (int x = 0; x < order_; ++x) {
    if (seen[x]) continue;
    ++classes;
    for (int h = 0; h < order_; ++h) seen[mul(mul(h, x), inv_[h])] = true;
  }
  return classes;
}

int FiniteGroup::element_order(ElementIndex x) const {
  int o = 1;
  for (int y = x; y != 0; y = mul(y, x)) ++o;
  return o;
}

FiniteGroup FiniteGroup::relabeled(const Perm& perm, std::string name) const {
  if (static_cast<int>(perm.size()) != order_ || !is_valid_perm(perm))
    throw InvalidArgumentError("relabeling is not a permutation of the group");
  std::vector<int> flat(mul_.size());
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      flat[static_cast<size_t>(perm[a]) * order_ + perm[b]] = perm[mul(a, b)];
  if (name.empty()) name = name_;
  return from_table_flat(std::move(flat), order_, std::move(name));
}

}  // namespace gcob
