#pragma once

#include <span>
#include <string>
#include <vector>

#include "cdlat/group.hpp"

namespace cdlat {

// Named group families. Everything returns a validated Group with a
// deterministic label; parameter problems raise UsageError and order-cap
// problems ResourceError.

// C_n, elements 0..n-1 under addition mod n.
Group cyclic(int n);

// Direct product of cyclic groups of the given orders (each >= 2).
Group abelian_of_type(std::span<const int> orders);

// Dihedral group of order two_n (two_n even, >= 2): indices 0..n-1 are
// rotations, n..2n-1 reflections.
Group dihedral(int two_n);

// Generalized quaternion group of order 2^n, n >= 3, built from
// <a, b | a^(2^(n-1)) = 1, a^(2^(n-2)) = b^2, b^-1 a b = a^-1>.
Group generalized_quaternion(int n);

// Semidihedral group of order 2^n, n >= 4:
// <a, b | a^(2^(n-1)) = b^2 = 1, b^-1 a b = a^(2^(n-2) - 1)>.
Group semidihedral(int n);

// Modular maximal-cyclic group M(n,1) of order p^(n+1), n >= 2:
// <a, b | a^(p^n) = b^p = 1, b^-1 a b = a^(1 + p^(n-1))>.
// For odd p and n = 2 this is the exponent-p^2 extraspecial group of order
// p^3, which the extraspecial builder uses as its '-' factor.
Group modular_maximal_cyclic(int p, int n);

// Heisenberg group over Z/p: triples (a, b, c) with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'). Order p^3, exponent p for
// odd p.
Group heisenberg(int p);

// Extraspecial group of order p^(2m+1), built as an iterated central
// product of m factors of order p^3. Type '+' uses the "all base" factors
// (D8 for p = 2, Heisenberg for odd p); type '-' swaps the last factor for
// the exceptional one (Q8 for p = 2, the exponent-p^2 group otherwise).
Group extraspecial(int p, int m, char type);

// Central product E * A with E = extraspecial(p, m, '+').
// kind 'C': A = cyclic(p^param) with param >= 2.
// kind 'M': A = modular_maximal_cyclic(p, param) with param >= 3.
Group extraspecial_central_product(int p, int m, char kind, int param);

// The order-32 group <a,b,c | a^4 = 1, b^4 = a^2, c^2 = a^-1,
// b a b^-1 = a^-1, ac = ca, c b c^-1 = a^-1 b^3> (nilpotence class 3).
Group small_group_32_8();

// Parsed form of a CLI "construct" request.
struct FamilySpec {
  std::string family;
  std::vector<std::string> args;

  // Throws UsageError for unknown families or bad parameters.
  Group build() const;

  // One line per family: name, parameters, constraints.
  static std::string help();
};

// Deterministic test corpus of groups with order <= max_order: cyclic
// groups, abelian p-group types, dihedral / quaternion / semidihedral
// 2-groups, a few non-2-power dihedrals, modular maximal-cyclic groups,
// extraspecial families and their central products, assorted direct
// products, the order-32 group above, and all fourteen groups of order 16
// from the bundled presentation file (which are the corpus's only order-16
// entries). Entries are deduplicated by table identity; labels are unique.
std::vector<Group> builtin_corpus(int max_order);

// The bundled order-16 presentation corpus, enumerated.
std::vector<Group> order16_groups();

}  // namespace cdlat
