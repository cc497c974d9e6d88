#include "cdlat/group.hpp"

#include <algorithm>
#include <random>

#include "cdlat/config.hpp"
#include "cdlat/errors.hpp"

namespace cdlat {

Group::Group(int order, std::vector<std::uint16_t> table, std::string label)
    : n_(order), t_(std::move(table)), label_(std::move(label)) {
  if (n_ < 1) throw UsageError("group order must be at least 1");
  if (n_ > limits::order_cap())
    throw ResourceError("group order " + std::to_string(n_) +
                        " exceeds order cap " +
                        std::to_string(limits::order_cap()));
  if (t_.size() != static_cast<std::size_t>(n_) * n_)
    throw UsageError("multiplication table has " + std::to_string(t_.size()) +
                     " entries, expected " + std::to_string(n_) + "^2");
  validate();
}

void Group::validate() const {
  const int n = n_;
  for (std::size_t k = 0; k < t_.size(); ++k)
    if (t_[k] >= n)
      throw UsageError("table entry out of range at cell " + std::to_string(k));

  // Identity at index 0.
  for (int i = 0; i < n; ++i)
    if (mul(0, i) != i || mul(i, 0) != i)
      throw ContractError("element 0 is not a two-sided identity in '" +
                          label_ + "'");

  // Latin square: every row and column is a permutation.
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      if (seen[static_cast<std::size_t>(mul(i, j))]++)
        throw ContractError("row " + std::to_string(i) +
                            " repeats a value; table is not cancellative");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      if (seen[static_cast<std::size_t>(mul(j, i))]++)
        throw ContractError("column " + std::to_string(i) +
                            " repeats a value; table is not cancellative");
    }
  }

  // Associativity: exhaustive for small tables, seeded random spot checks
  // above that (the cube of the order gets expensive fast).
  if (n <= 512) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int ab = mul(a, b);
        for (int c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c)))
            throw ContractError("table is not associative at (" +
                                std::to_string(a) + ", " + std::to_string(b) +
                                ", " + std::to_string(c) + ")");
      }
  } else {
    std::mt19937_64 rng(0x5eedULL ^ static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < 10000; ++k) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw ContractError("table is not associative at (" +
                            std::to_string(a) + ", " + std::to_string(b) +
                            ", " + std::to_string(c) + ")");
    }
  }

  // Two-sided inverses; with a Latin square and identity these exist, but we
  // derive and double-check them so inverse() is a plain lookup.
  auto& inv = const_cast<std::vector<std::uint16_t>&>(inv_);
  inv.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int j = 0;
    while (mul(i, j) != 0) ++j;
    if (mul(j, i) != 0)
      throw ContractError("element " + std::to_string(i) +
                          " has no two-sided inverse");
    inv[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(j);
  }
}

int Group::product(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw UsageError("element index out of range for group of order " +
                     std::to_string(n_));
  return mul(i, j);
}

int Group::inverse(int i) const {
  if (i < 0 || i >= n_) throw UsageError("element index out of range");
  return inv_[static_cast<std::size_t>(i)];
}

int Group::power(int i, long long k) const {
  if (i < 0 || i >= n_) throw UsageError("element index out of range");
  int base = k < 0 ? inverse(i) : i;
  unsigned long long e =
      k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ULL
            : static_cast<unsigned long long>(k);
  int acc = 0;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int Group::element_order(int i) const {
  if (i < 0 || i >= n_) throw UsageError("element index out of range");
  int k = 1, x = i;
  while (x != 0) {
    x = mul(x, i);
    ++k;
  }
  return k;
}

bool Group::is_abelian() const {
  for (int i = 1; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

bool Group::is_cyclic() const {
  for (int i = 0; i < n_; ++i)
    if (element_order(i) == n_) return true;
  return n_ == 1;
}

Bitset Group::element_centralizer(int i) const {
  if (i < 0 || i >= n_) throw UsageError("element index out of range");
  Bitset out(n_);
  for (int x = 0; x < n_; ++x)
    if (mul(x, i) == mul(i, x)) out.set(x);
  return out;
}

Group Group::relabeled(std::string label) const {
  Group g = *this;
  g.label_ = std::move(label);
  return g;
}

Subgroup Subgroup::whole(const Group& g) {
  Bitset b(g.order());
  for (int i = 0; i < g.order(); ++i) b.set(i);
  return {&g, std::move(b)};
}

Subgroup Subgroup::trivial(const Group& g) {
  Bitset b(g.order());
  b.set(0);
  return {&g, std::move(b)};
}

Subgroup Subgroup::checked(const Group& g, Bitset members) {
  if (members.universe() != g.order())
    throw UsageError("membership set universe does not match group order");
  if (!is_subgroup_bits(g, members))
    throw UsageError("membership set is not a subgroup of '" + g.label() +
                     "'");
  return {&g, std::move(members)};
}

bool is_subgroup_bits(const Group& g, const Bitset& members) {
  if (members.universe() != g.order() || !members.test(0)) return false;
  for (int i = members.first_set(); i >= 0; i = members.next_set(i + 1))
    for (int j = members.first_set(); j >= 0; j = members.next_set(j + 1))
      if (!members.test(g.mul(i, j))) return false;
  return true;
}

Bitset closure(const Group& g, std::span<const int> seed) {
  Bitset out(g.order());
  out.set(0);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int s : seed) {
      int y = g.mul(x, s);
      if (!out.test(y)) {
        out.set(y);
        stack.push_back(y);
      }
    }
  }
  return out;
}

Bitset closure(const Group& g, const Bitset& seed) {
  std::vector<int> gens = seed.elements();
  return closure(g, gens);
}

Subgroup centralizer(const Group& g, const Subgroup& h) {
  if (h.parent != &g) throw UsageError("subgroup belongs to a different group");
  if (!is_subgroup_bits(g, h.members))
    throw UsageError("centralizer argument is not closed");
  Bitset out(g.order());
  for (int x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (int y = h.members.first_set(); y >= 0; y = h.members.next_set(y + 1))
      if (g.mul(x, y) != g.mul(y, x)) {
        commutes = false;
        break;
      }
    if (commutes) out.set(x);
  }
  return {&g, std::move(out)};
}

Subgroup center(const Group& g) {
  Bitset out(g.order());
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 1; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) {
        central = false;
        break;
      }
    if (central) out.set(x);
  }
  return {&g, std::move(out)};
}

Bitset commutator_of(const Group& g, const Bitset& a_set, const Bitset& b_set) {
  Bitset gens(g.order());
  for (int a = a_set.first_set(); a >= 0; a = a_set.next_set(a + 1))
    for (int b = b_set.first_set(); b >= 0; b = b_set.next_set(b + 1))
      gens.set(g.commutator(a, b));
  return closure(g, gens);
}

Subgroup commutator_subgroup(const Group& g) {
  Subgroup whole = Subgroup::whole(g);
  return {&g, commutator_of(g, whole.members, whole.members)};
}

Series lower_central_series(const Group& g) {
  Series s;
  s.terms.push_back(Subgroup::whole(g));
  const Bitset whole = s.terms.front().members;
  while (true) {
    const Bitset& prev = s.terms.back().members;
    Bitset next = commutator_of(g, prev, whole);
    if (next == prev) break;  // stabilized (trivial iff nilpotent)
    s.terms.push_back({&g, std::move(next)});
    if (s.terms.back().size() == 1) break;
  }
  return s;
}

std::optional<int> nilpotence_class(const Group& g) {
  Series s = lower_central_series(g);
  if (s.terms.back().size() != 1) return std::nullopt;
  // Trivial group: series is just [1], class 0.
  return static_cast<int>(s.terms.size()) - 1;
}

bool is_normal(const Group& g, const Subgroup& h) {
  if (h.parent != &g) throw UsageError("subgroup belongs to a different group");
  for (int x = 0; x < g.order(); ++x) {
    int xi = g.inverse(x);
    for (int y = h.members.first_set(); y >= 0; y = h.members.next_set(y + 1))
      if (!h.members.test(g.mul(g.mul(x, y), xi))) return false;
  }
  return true;
}

Group quotient(const Group& g, const Subgroup& n) {
  if (n.parent != &g) throw UsageError("subgroup belongs to a different group");
  if (!is_subgroup_bits(g, n.members))
    throw UsageError("quotient by a set that is not a subgroup");
  if (!is_normal(g, n))
    throw UsageError("quotient by a non-normal subgroup of '" + g.label() +
                     "'");

  const int order = g.order();
  // Canonical representative of each coset: its smallest element. The
  // identity coset gets index 0 because 0 is the smallest element overall.
  std::vector<int> rep_of(static_cast<std::size_t>(order), -1);
  std::vector<int> reps;
  for (int x = 0; x < order; ++x) {
    if (rep_of[static_cast<std::size_t>(x)] >= 0) continue;
    reps.push_back(x);
    for (int y = n.members.first_set(); y >= 0; y = n.members.next_set(y + 1))
      rep_of[static_cast<std::size_t>(g.mul(x, y))] = x;
  }

  std::vector<int> index_of(static_cast<std::size_t>(order), -1);
  for (std::size_t i = 0; i < reps.size(); ++i)
    index_of[static_cast<std::size_t>(reps[i])] = static_cast<int>(i);

  const int q = static_cast<int>(reps.size());
  std::vector<std::uint16_t> table(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      int prod = g.mul(reps[static_cast<std::size_t>(i)],
                       reps[static_cast<std::size_t>(j)]);
      table[static_cast<std::size_t>(i) * q + j] = static_cast<std::uint16_t>(
          index_of[static_cast<std::size_t>(
              rep_of[static_cast<std::size_t>(prod)])]);
    }
  return Group(q, std::move(table),
               g.label() + "/N" + std::to_string(n.size()));
}

Group direct_product(const Group& a, const Group& b) {
  long long order = static_cast<long long>(a.order()) * b.order();
  if (order > limits::order_cap())
    throw ResourceError("direct product order " + std::to_string(order) +
                        " exceeds order cap " +
                        std::to_string(limits::order_cap()));
  const int n = static_cast<int>(order), nb = b.order();
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const int ia = i / nb, ib = i % nb;
    for (int j = 0; j < n; ++j) {
      const int ja = j / nb, jb = j % nb;
      table[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>(
          a.mul(ia, ja) * nb + b.mul(ib, jb));
    }
  }
  return Group(n, std::move(table), a.label() + "x" + b.label());
}

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Group central_product(const Group& e, const Group& a) {
  const Subgroup ze = center(e);
  const int p = ze.size();
  if (!is_prime(p))
    throw UsageError("central product: |Z(" + e.label() + ")| = " +
                     std::to_string(p) + " is not prime");

  const Subgroup za = center(a);
  // Z(A) must be cyclic with order divisible by p.
  int za_gen = -1;
  for (int x = za.members.first_set(); x >= 0; x = za.members.next_set(x + 1))
    if (a.element_order(x) == za.size()) {
      za_gen = x;
      break;
    }
  if (za_gen < 0)
    throw UsageError("central product: Z(" + a.label() + ") is not cyclic");
  if (za.size() % p != 0)
    throw UsageError("central product: |Z(" + a.label() +
                     ")| is not divisible by " + std::to_string(p));

  // Canonical generators: smallest non-identity element of Z(E), smallest
  // order-p element of Z(A).
  const int ze_gen = ze.members.next_set(1);
  int zap_gen = -1;
  for (int x = za.members.next_set(1); x >= 0; x = za.members.next_set(x + 1))
    if (a.element_order(x) == p) {
      zap_gen = x;
      break;
    }
  if (zap_gen < 0)
    throw ContractError("central product: no order-" + std::to_string(p) +
                        " element in Z(" + a.label() + ")");

  Group prod = direct_product(e, a);
  // N = { (z^k, w^-k) } where z generates Z(E) and w the order-p subgroup of
  // Z(A). Central, hence normal.
  Bitset nbits(prod.order());
  const int nb = a.order();
  int ek = 0, ak = 0;  // z^k in E, w^-k in A
  const int aw_inv = a.inverse(zap_gen);
  for (int k = 0; k < p; ++k) {
    nbits.set(ek * nb + ak);
    ek = e.mul(ek, ze_gen);
    ak = a.mul(ak, aw_inv);
  }
  Subgroup n = Subgroup::checked(prod, std::move(nbits));
  return quotient(prod, n).relabeled(e.label() + "*" + a.label());
}

}  // namespace cdlat
