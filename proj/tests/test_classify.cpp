#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "cdlat/analysis.hpp"
#include "cdlat/classify.hpp"
#include "cdlat/constructors.hpp"
#include "cdlat/errors.hpp"

using namespace cdlat;

TEST_CASE("integer factorization") {
  CHECK(factorize(1).empty());
  auto f12 = factorize(12);
  REQUIRE(f12.size() == 2);
  CHECK(f12[0].p == 2);
  CHECK(f12[0].e == 2);
  CHECK(f12[1].p == 3);
  CHECK(f12[1].e == 1);
  auto f97 = factorize(97);
  REQUIRE(f97.size() == 1);
  CHECK(f97[0].p == 97);
  CHECK(f97[0].e == 1);
  CHECK_THROWS_AS(factorize(0), UsageError);
  CHECK_THROWS_AS(factorize(-5), UsageError);
}

TEST_CASE("prime-power detection") {
  auto info = p_group_info(cyclic(16));
  REQUIRE(info.has_value());
  CHECK(info->p == 2);
  CHECK(info->n == 4);
  CHECK(p_group_info(heisenberg(3))->p == 3);
  CHECK_FALSE(p_group_info(cyclic(12)).has_value());
  CHECK_FALSE(p_group_info(cyclic(1)).has_value());
}

TEST_CASE("two-value membership") {
  CHECK(in_class_c(Analysis::of(cyclic(3))));
  CHECK(in_class_c(Analysis::of(generalized_quaternion(3))));
  CHECK(in_class_c(Analysis::of(dihedral(8))));
  CHECK(in_class_c(Analysis::of(heisenberg(5))));
  CHECK_FALSE(in_class_c(Analysis::of(cyclic(4))));   // {4, 8, 16}
  CHECK_FALSE(in_class_c(Analysis::of(cyclic(6))));   // not a p-group
  CHECK_FALSE(in_class_c(Analysis::of(dihedral(16))));
  CHECK_THROWS_AS(in_class_c(Analysis::of(cyclic(1))), UsageError);
}

TEST_CASE("extraspecial recognition") {
  CHECK(is_extraspecial(Analysis::of(dihedral(8))));
  CHECK(is_extraspecial(Analysis::of(generalized_quaternion(3))));
  CHECK(is_extraspecial(Analysis::of(extraspecial(3, 1, '-'))));
  CHECK(is_extraspecial(Analysis::of(extraspecial(2, 2, '+'))));
  CHECK_FALSE(is_extraspecial(Analysis::of(cyclic(8))));
  CHECK_FALSE(is_extraspecial(Analysis::of(dihedral(16))));
  CHECK_FALSE(is_extraspecial(Analysis::of(modular_maximal_cyclic(2, 3))));
  CHECK_FALSE(is_extraspecial(Analysis::of(small_group_32_8())));
  CHECK_FALSE(is_extraspecial(Analysis::of(dihedral(6))));  // not a p-group
}

TEST_CASE("outer abelian: all proper quotients abelian") {
  CHECK(is_outer_abelian(Analysis::of(generalized_quaternion(3))));
  CHECK(is_outer_abelian(Analysis::of(dihedral(8))));
  CHECK(is_outer_abelian(Analysis::of(heisenberg(3))));
  // D16 / <r^4> is D8: a non-abelian proper quotient.
  CHECK_FALSE(is_outer_abelian(Analysis::of(dihedral(16))));
  CHECK_FALSE(is_outer_abelian(Analysis::of(cyclic(8))));  // abelian
}

TEST_CASE("maximal class") {
  CHECK(is_maximal_class(dihedral(8)));
  CHECK(is_maximal_class(generalized_quaternion(4)));
  CHECK(is_maximal_class(semidihedral(5)));
  CHECK(is_maximal_class(heisenberg(3)));  // order 27, class 2 = n - 1
  CHECK_FALSE(is_maximal_class(cyclic(8)));
  CHECK_FALSE(is_maximal_class(modular_maximal_cyclic(2, 3)));  // class 2 at n=4
  CHECK_FALSE(is_maximal_class(extraspecial(3, 2, '+')));       // class 2 at n=5
  // Degenerate but by the book: order p^2 means class 1 = n - 1, matching
  // the coclass-1 convention.
  CHECK(is_maximal_class(abelian_of_type(std::vector<int>{2, 2})));
  CHECK(is_maximal_class(cyclic(9)));
  CHECK_FALSE(is_maximal_class(cyclic(2)));  // class 1 at n = 1
  CHECK_THROWS_AS(is_maximal_class(cyclic(12)), UsageError);
}

TEST_CASE("self-centralizing subgroups of order p^2") {
  auto witness = self_centralizing_p2(Analysis::of(dihedral(16)));
  CHECK(witness.has_value());
  CHECK_FALSE(self_centralizing_p2(Analysis::of(cyclic(16))).has_value());
  CHECK_FALSE(
      self_centralizing_p2(Analysis::of(modular_maximal_cyclic(2, 3)))
          .has_value());
  // In Q8 every order-4 subgroup is self-centralizing.
  CHECK(self_centralizing_p2(Analysis::of(generalized_quaternion(3)))
            .has_value());
}

TEST_CASE("unique subgroup of order p") {
  CHECK(unique_subgroup_order_p(Analysis::of(cyclic(8))));
  CHECK(unique_subgroup_order_p(Analysis::of(generalized_quaternion(4))));
  CHECK(unique_subgroup_order_p(Analysis::of(cyclic(9))));
  CHECK_FALSE(unique_subgroup_order_p(Analysis::of(dihedral(8))));
  CHECK_FALSE(
      unique_subgroup_order_p(Analysis::of(abelian_of_type(std::vector<int>{3, 3}))));
  CHECK_THROWS_AS(unique_subgroup_order_p(Analysis::of(cyclic(6))),
                  UsageError);
  CHECK_THROWS_AS(unique_subgroup_order_p(Analysis::of(cyclic(1))),
                  UsageError);
}

TEST_CASE("unique minimal subgroup works for any group") {
  CHECK(has_unique_minimal_subgroup(Analysis::of(cyclic(4))));
  CHECK(has_unique_minimal_subgroup(Analysis::of(generalized_quaternion(3))));
  CHECK_FALSE(has_unique_minimal_subgroup(Analysis::of(cyclic(6))));
  CHECK_FALSE(has_unique_minimal_subgroup(Analysis::of(dihedral(6))));
  CHECK_FALSE(has_unique_minimal_subgroup(Analysis::of(cyclic(1))));
}

TEST_CASE("quaternion fingerprint") {
  CHECK(q2n_fingerprint(Analysis::of(generalized_quaternion(3))));
  CHECK(q2n_fingerprint(Analysis::of(generalized_quaternion(4))));
  CHECK(q2n_fingerprint(Analysis::of(generalized_quaternion(5))));
  CHECK_FALSE(q2n_fingerprint(Analysis::of(dihedral(8))));
  CHECK_FALSE(q2n_fingerprint(Analysis::of(cyclic(8))));
  CHECK_FALSE(q2n_fingerprint(Analysis::of(semidihedral(4))));
  CHECK_FALSE(q2n_fingerprint(Analysis::of(modular_maximal_cyclic(2, 3))));
  CHECK_FALSE(q2n_fingerprint(Analysis::of(abelian_of_type(std::vector<int>{4, 2}))));
}

TEST_CASE("large abelian subgroups rule out the two-value property") {
  // D16 has order 2^4, bound 2^3: the rotation subgroup C8 is a witness.
  Analysis d16 = Analysis::of(dihedral(16));
  auto witness = prop26_witness(d16);
  REQUIRE(witness.has_value());
  CHECK(d16.lattice.at(*witness).size() >= 8);
  CHECK(is_abelian_subgroup(d16.lattice.at(*witness)));

  // ES(32): order 2^5, bound 2^4 = 16; abelian subgroups top out at 8.
  CHECK_FALSE(prop26_witness(Analysis::of(extraspecial(2, 2, '+'))).has_value());
  // Q8: order 2^3, bound 2^3 = 8; only the whole group has order 8.
  CHECK_FALSE(prop26_witness(Analysis::of(generalized_quaternion(3))).has_value());

  CHECK_THROWS_AS(prop26_witness(Analysis::of(cyclic(8))), UsageError);
  CHECK_THROWS_AS(prop26_witness(Analysis::of(dihedral(6))), UsageError);
}

TEST_CASE("cyclic subgroup predicate") {
  Analysis a = Analysis::of(dihedral(8));
  int cyclic_count = 0;
  for (int i = 0; i < a.lattice.size(); ++i)
    if (is_cyclic_subgroup(a.lattice.at(i))) ++cyclic_count;
  // 1, Z, four reflections, <r>: the two Klein subgroups and G are not.
  CHECK(cyclic_count == 7);
}

TEST_CASE("full classification of the order-32 class-3 group") {
  ClassificationReport r = classify_full(Analysis::of(small_group_32_8()));
  CHECK(r.label == "SG(32,8)");
  CHECK(r.order == 32);
  REQUIRE(r.p_group.has_value());
  CHECK(r.p_group->p == 2);
  CHECK(r.p_group->n == 5);
  CHECK(r.nilpotence == 3);
  CHECK(r.in_class_c);
  CHECK(r.measure_image == std::vector<std::uint64_t>{32, 64});
  CHECK_FALSE(r.is_extraspecial);
  CHECK_FALSE(r.is_maximal_class);
  CHECK_FALSE(r.is_abelian);
  // The center is its unique minimal *normal* subgroup, but the lattice has
  // several atoms; were there only one, the group would be cyclic or
  // generalized quaternion.
  CHECK_FALSE(r.has_unique_minimal_subgroup);
  CHECK_FALSE(r.large_abelian_witness.has_value());
}

TEST_CASE("full classification of Q8 and of a non-p-group") {
  ClassificationReport q8 = classify_full(Analysis::of(generalized_quaternion(3)));
  CHECK(q8.order == 8);
  CHECK(q8.is_extraspecial);
  CHECK(q8.is_outer_abelian);
  CHECK(q8.is_maximal_class);
  CHECK(q8.in_class_c);
  CHECK(q8.nilpotence == 2);
  CHECK(q8.measure_image == std::vector<std::uint64_t>{8, 16});
  CHECK(q8.self_centralizing_p2.has_value());

  ClassificationReport s3 = classify_full(Analysis::of(dihedral(6)));
  CHECK(s3.order == 6);
  CHECK_FALSE(s3.p_group.has_value());
  CHECK_FALSE(s3.nilpotence.has_value());
  CHECK_FALSE(s3.in_class_c);
  CHECK_FALSE(s3.is_extraspecial);
  REQUIRE(s3.factorization.size() == 2);

  CHECK_THROWS_AS(classify_full(Analysis::of(cyclic(1))), UsageError);
}
