#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdlat/analysis.hpp"
#include "cdlat/group.hpp"

namespace cdlat {

struct PrimePower {
  int p = 0;
  int e = 0;
};

std::vector<PrimePower> factorize(int n);

// Set when the order is p^n with n >= 1.
struct PGroupInfo {
  int p = 0;
  int n = 0;
};

std::optional<PGroupInfo> p_group_info(const Group& g);

struct ClassificationReport {
  std::string label;
  int order = 0;
  std::vector<PrimePower> factorization;
  bool is_abelian = false;
  bool is_cyclic = false;
  std::optional<PGroupInfo> p_group;
  std::optional<int> nilpotence;  // nullopt: not nilpotent
  bool is_maximal_class = false;
  bool is_extraspecial = false;
  bool is_outer_abelian = false;
  bool has_unique_minimal_subgroup = false;
  bool in_class_c = false;
  std::vector<std::uint64_t> measure_image;
  std::optional<int> self_centralizing_p2;   // lattice index, if any
  std::optional<int> large_abelian_witness;  // lattice index, if any
};

// Exactly two distinct measure values. The trivial group is rejected
// (UsageError): its measure map has a single value by force, so membership
// is not a meaningful question for it.
bool in_class_c(const Analysis& a);

// p-group with center = derived subgroup = Frattini subgroup of order p.
bool is_extraspecial(const Analysis& a);

// Non-abelian with every proper quotient abelian, tested as: the derived
// subgroup lies in every nontrivial normal subgroup.
bool is_outer_abelian(const Analysis& a);

// Nilpotence class n-1 at order p^n, n >= 2. Throws UsageError on
// non-prime-power orders.
bool is_maximal_class(const Group& g);

// A witness subgroup A with |A| = p^2 and C_G(A) = A, if one exists.
// Throws UsageError on non-prime-power orders.
std::optional<int> self_centralizing_p2(const Analysis& a);

// Exactly one subgroup of order p. Throws UsageError unless the group is a
// nontrivial p-group.
bool unique_subgroup_order_p(const Analysis& a);

// Exactly one atom in the subgroup lattice (any group).
bool has_unique_minimal_subgroup(const Analysis& a);

// Invariant fingerprint of the generalized quaternion 2-groups: order 2^n
// with n >= 3, non-abelian, a single element of order 2, and a cyclic
// subgroup of index 2.
bool q2n_fingerprint(const Analysis& a);

// For a non-abelian group of order p^n: the first abelian subgroup of order
// at least p^floor((n+3)/2), if any. Such a witness rules the group out of
// the two-value class. Throws UsageError on abelian or non-prime-power
// input.
std::optional<int> prop26_witness(const Analysis& a);

bool is_cyclic_subgroup(const Subgroup& h);

// Aggregates everything above; throws UsageError on the trivial group.
ClassificationReport classify_full(const Analysis& a);

}  // namespace cdlat
