#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdlat/bitset.hpp"

namespace cdlat {

// A finite group as a dense multiplication table. Elements are indices
// 0..n-1 with the identity pinned at 0. Construction validates the table
// (identity row/column, Latin square, two-sided inverses, associativity) and
// throws ContractError if anything fails, so a live Group is always a group.
//
// Associativity is checked exhaustively up to order 512 and on 10,000
// deterministically seeded random triples above that.
//
// Instances are immutable after construction and safe to share across
// threads.
class Group {
 public:
  Group(int order, std::vector<std::uint16_t> table, std::string label);

  int order() const noexcept { return n_; }
  const std::string& label() const noexcept { return label_; }

  // Unchecked product; callers must pass valid indices.
  int mul(int i, int j) const {
    return t_[static_cast<std::size_t>(i) * n_ + j];
  }

  // Range-checked product for untrusted indices (throws UsageError).
  int product(int i, int j) const;

  int inverse(int i) const;

  // i^k for any integer k (negative exponents use the inverse).
  int power(int i, long long k) const;

  // Smallest positive k with i^k = identity.
  int element_order(int i) const;

  // [x, y] = x^-1 y^-1 x y.
  int commutator(int x, int y) const {
    return mul(mul(inverse(x), inverse(y)), mul(x, y));
  }

  bool is_abelian() const;
  bool is_cyclic() const;

  // Elements commuting with i.
  Bitset element_centralizer(int i) const;

  // Same table under a different name; no revalidation.
  Group relabeled(std::string label) const;

  // Label is provenance, not identity: equality compares order and table.
  friend bool operator==(const Group& a, const Group& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint16_t> t_;    // row-major, t_[i*n+j] = i*j
  std::vector<std::uint16_t> inv_;  // two-sided inverses
  std::string label_;

  void validate() const;
};

// A subgroup is a membership bitset over its parent's elements. The parent
// pointer is non-owning; the Group must outlive the Subgroup.
struct Subgroup {
  const Group* parent = nullptr;
  Bitset members;

  int size() const { return members.count(); }
  bool contains(int i) const { return members.test(i); }
  std::vector<int> elements() const { return members.elements(); }

  static Subgroup whole(const Group& g);
  static Subgroup trivial(const Group& g);

  // Wraps a membership set after checking it really is a subgroup
  // (identity present, closed under the table). Throws UsageError if not.
  static Subgroup checked(const Group& g, Bitset members);

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent == b.parent && a.members == b.members;
  }
};

// True iff `members` contains the identity and is closed under products.
// (Closure suffices for a subgroup in a finite group.)
bool is_subgroup_bits(const Group& g, const Bitset& members);

// Membership set of the subgroup generated by `seed`.
Bitset closure(const Group& g, std::span<const int> seed);
Bitset closure(const Group& g, const Bitset& seed);

// A descending chain of subgroups of one group: terms[0] is the whole group
// and each later term is strictly contained in the one before.
struct Series {
  std::vector<Subgroup> terms;
};

// C_G(h): everything commuting with all of h. Throws UsageError if h is not
// closed.
Subgroup centralizer(const Group& g, const Subgroup& h);

Subgroup center(const Group& g);

// Derived subgroup, generated by all commutators.
Subgroup commutator_subgroup(const Group& g);

// Subgroup generated by commutators [a, b] with a in `a_set`, b in `b_set`.
Bitset commutator_of(const Group& g, const Bitset& a_set, const Bitset& b_set);

// Lower central series until it stabilizes. Ends at the trivial subgroup
// exactly when g is nilpotent.
Series lower_central_series(const Group& g);

// Length of the lower central series minus one, or nullopt when the series
// stabilizes above the trivial subgroup (g not nilpotent). The trivial group
// has class 0.
std::optional<int> nilpotence_class(const Group& g);

bool is_normal(const Group& g, const Subgroup& h);

// G/N on coset representatives (smallest element of each coset, so the
// identity coset is index 0). Throws UsageError if n is not normal.
Group quotient(const Group& g, const Subgroup& n);

// A x B with pairs (i, j) flattened to i*|B| + j. Throws ResourceError when
// the product order exceeds the configured cap.
Group direct_product(const Group& a, const Group& b);

// Central product E * A = (E x A) / N, where N identifies the prime-order
// center of E with the unique subgroup of that order inside the cyclic
// center of A. The amalgamation is canonical: the smallest non-identity
// element of Z(E) is paired with the smallest order-p element of Z(A).
// Preconditions (else UsageError): |Z(E)| = p prime; Z(A) cyclic with p
// dividing its order.
Group central_product(const Group& e, const Group& a);

}  // namespace cdlat
