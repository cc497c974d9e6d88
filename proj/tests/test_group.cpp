#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cdlat/config.hpp"
#include "cdlat/constructors.hpp"
#include "cdlat/errors.hpp"
#include "cdlat/group.hpp"

using namespace cdlat;

namespace {

std::vector<std::uint16_t> cyclic_table(int n) {
  std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::uint16_t>((i + j) % n);
  return t;
}

}  // namespace

TEST_CASE("table validation accepts C4 and rejects broken tables") {
  CHECK_NOTHROW(Group(4, cyclic_table(4), "C4"));

  SUBCASE("identity must be element 0") {
    // Swap the roles of 0 and 1 in C2: row 0 is no longer the identity row.
    std::vector<std::uint16_t> t = {1, 0, 0, 1};
    CHECK_THROWS_AS(Group(2, t, "bad"), ContractError);
  }

  SUBCASE("rows must be permutations") {
    std::vector<std::uint16_t> t = cyclic_table(3);
    t[4] = 0;  // duplicate symbol in row 1
    CHECK_THROWS_AS(Group(3, t, "bad"), ContractError);
  }

  SUBCASE("associativity is enforced") {
    // A Latin square with identity that is not a group table: swap two
    // entries deep in the 5x5 cyclic square so rows/columns stay Latin.
    std::vector<std::uint16_t> t = cyclic_table(5);
    // Rows 1 and 2 swapped beyond column 0 keep columns Latin but break
    // associativity.
    for (int j = 1; j < 5; ++j)
      std::swap(t[1 * 5 + j], t[2 * 5 + j]);
    CHECK_THROWS_AS(Group(5, t, "bad"), ContractError);
  }

  SUBCASE("size mismatch") {
    CHECK_THROWS_AS(Group(3, cyclic_table(4), "bad"), UsageError);
  }
}

TEST_CASE("order cap blocks oversized constructions") {
  const int old_cap = limits::order_cap();
  limits::set_order_cap(16);
  CHECK_THROWS_AS(cyclic(17), ResourceError);
  CHECK_NOTHROW(cyclic(16));
  limits::set_order_cap(old_cap);
}

TEST_CASE("basic arithmetic in C6") {
  Group g = cyclic(6);
  CHECK(g.order() == 6);
  CHECK(g.label() == "C6");
  CHECK(g.mul(2, 5) == 1);
  CHECK(g.inverse(0) == 0);
  CHECK(g.inverse(2) == 4);
  CHECK(g.power(5, 0) == 0);
  CHECK(g.power(1, 37) == 1);
  CHECK(g.power(1, -1) == 5);
  CHECK(g.element_order(0) == 1);
  CHECK(g.element_order(1) == 6);
  CHECK(g.element_order(2) == 3);
  CHECK(g.element_order(3) == 2);
  CHECK(g.is_abelian());
  CHECK(g.is_cyclic());
}

TEST_CASE("commutators and centralizers in D8") {
  Group g = dihedral(8);  // 0..3 rotations, 4..7 reflections
  CHECK(g.order() == 8);
  CHECK_FALSE(g.is_abelian());
  CHECK_FALSE(g.is_cyclic());

  // Rotations commute with each other.
  CHECK(g.commutator(1, 2) == 0);
  // A reflection and the generating rotation do not.
  CHECK(g.commutator(1, 4) != 0);

  // The centralizer of a reflection contains the half-turn.
  Bitset c = g.element_centralizer(4);
  CHECK(c.test(0));
  CHECK(c.test(2));  // r^2 is central
  CHECK(c.test(4));
  CHECK(c.count() == 4);

  Subgroup z = center(g);
  CHECK(z.size() == 2);
  CHECK(z.contains(0));
  CHECK(z.contains(2));

  Subgroup d = commutator_subgroup(g);
  CHECK(d.size() == 2);
  CHECK(d.contains(2));
}

TEST_CASE("element orders in Q8: exactly one involution") {
  Group g = generalized_quaternion(3);
  CHECK(g.order() == 8);
  int involutions = 0;
  for (int i = 1; i < g.order(); ++i)
    if (g.element_order(i) == 2) ++involutions;
  CHECK(involutions == 1);
  CHECK(center(g).size() == 2);
  CHECK(commutator_subgroup(g).size() == 2);
}

TEST_CASE("closure generates subgroups") {
  Group g = dihedral(8);
  std::vector<int> seed = {1};  // the rotation of order 4
  Bitset rot = closure(g, seed);
  CHECK(rot.count() == 4);
  CHECK(is_subgroup_bits(g, rot));

  std::vector<int> two = {1, 4};
  CHECK(closure(g, two).count() == 8);

  Bitset empty_seed(g.order());
  Bitset triv = closure(g, empty_seed);
  CHECK(triv.count() == 1);
  CHECK(triv.test(0));
}

TEST_CASE("subgroup helpers") {
  Group g = cyclic(6);
  Subgroup w = Subgroup::whole(g);
  Subgroup t = Subgroup::trivial(g);
  CHECK(w.size() == 6);
  CHECK(t.size() == 1);
  CHECK(t.contains(0));

  Bitset not_closed(6);
  not_closed.set(0);
  not_closed.set(1);  // {0, 1} is not closed under addition mod 6
  CHECK_FALSE(is_subgroup_bits(g, not_closed));
  CHECK_THROWS_AS(Subgroup::checked(g, not_closed), UsageError);

  Bitset sub3(6);
  sub3.set(0);
  sub3.set(2);
  sub3.set(4);
  Subgroup h = Subgroup::checked(g, sub3);
  CHECK(h.size() == 3);
  CHECK(h.elements() == std::vector<int>{0, 2, 4});
}

TEST_CASE("centralizer of a subgroup") {
  Group g = dihedral(12);  // order 12
  Subgroup rot = Subgroup::checked(g, closure(g, std::vector<int>{1}));
  CHECK(rot.size() == 6);
  // The rotation subgroup is abelian, so it centralizes itself; no
  // reflection commutes with a rotation of order 6.
  Subgroup c = centralizer(g, rot);
  CHECK(c.size() == 6);
  CHECK(c.members == rot.members);

  // The centralizer of the whole group is the center, here {1, r^3}.
  CHECK(centralizer(g, Subgroup::whole(g)).size() == 2);
}

TEST_CASE("normality and quotients") {
  Group g = dihedral(8);
  Subgroup rot = Subgroup::checked(g, closure(g, std::vector<int>{1}));
  CHECK(is_normal(g, rot));

  Subgroup refl = Subgroup::checked(g, closure(g, std::vector<int>{4}));
  CHECK(refl.size() == 2);
  CHECK_FALSE(is_normal(g, refl));

  Group q = quotient(g, rot);
  CHECK(q.order() == 2);

  // Q8 / Z(Q8) is the Klein four-group: order 4, abelian, not cyclic.
  Group q8 = generalized_quaternion(3);
  Group v = quotient(q8, center(q8));
  CHECK(v.order() == 4);
  CHECK(v.is_abelian());
  CHECK_FALSE(v.is_cyclic());
  for (int i = 1; i < 4; ++i) CHECK(v.element_order(i) == 2);

  CHECK_THROWS_AS(quotient(g, refl), UsageError);  // not normal
}

TEST_CASE("nilpotence classes and the lower central series") {
  CHECK(nilpotence_class(cyclic(8)) == 1);
  CHECK(nilpotence_class(dihedral(8)) == 2);
  CHECK(nilpotence_class(generalized_quaternion(4)) == 3);
  CHECK(nilpotence_class(dihedral(32)) == 4);
  // S3 is not nilpotent.
  CHECK_FALSE(nilpotence_class(dihedral(6)).has_value());
  // The trivial group has class 0.
  CHECK(nilpotence_class(cyclic(1)) == 0);

  Series s = lower_central_series(dihedral(16));
  REQUIRE(s.terms.size() >= 2);
  CHECK(s.terms.front().size() == 16);
  CHECK(s.terms.back().size() == 1);
  // Terms strictly descend until stabilizing at the trivial subgroup.
  for (std::size_t i = 1; i < s.terms.size(); ++i)
    CHECK(s.terms[i].size() < s.terms[i - 1].size());
}

TEST_CASE("direct products") {
  Group g = direct_product(cyclic(2), cyclic(3));
  CHECK(g.order() == 6);
  CHECK(g.is_cyclic());  // gcd(2,3) = 1

  Group h = direct_product(cyclic(2), cyclic(2));
  CHECK(h.order() == 4);
  CHECK(h.is_abelian());
  CHECK_FALSE(h.is_cyclic());

  Group d = direct_product(dihedral(8), cyclic(2));
  CHECK(d.order() == 16);
  CHECK_FALSE(d.is_abelian());
  CHECK(center(d).size() == 4);
}

TEST_CASE("central products identify the centers") {
  // D8 * C4 amalgamates Z(D8) with the order-2 subgroup of C4:
  // order 8 * 4 / 2 = 16, center C4.
  Group g = central_product(dihedral(8), cyclic(4));
  CHECK(g.order() == 16);
  CHECK_FALSE(g.is_abelian());
  Subgroup z = center(g);
  CHECK(z.size() == 4);

  // D8 * D8 over the shared center has order 32.
  Group h = central_product(dihedral(8), dihedral(8));
  CHECK(h.order() == 32);
  CHECK(center(h).size() == 2);
  CHECK(commutator_subgroup(h).size() == 2);
}

TEST_CASE("commutator_of computes [A, B] generators") {
  Group g = dihedral(8);
  Bitset all = Subgroup::whole(g).members;
  Bitset d = commutator_of(g, all, all);
  CHECK(is_subgroup_bits(g, d));
  CHECK(d.count() == 2);
}

TEST_CASE("relabeling keeps the table") {
  Group g = cyclic(4);
  Group h = g.relabeled("renamed");
  CHECK(h.label() == "renamed");
  CHECK(h == g);
}
