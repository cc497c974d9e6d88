#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cdlat/analysis.hpp"
#include "cdlat/chermak_delgado.hpp"
#include "cdlat/constructors.hpp"
#include "cdlat/group.hpp"
#include "cdlat/lattice.hpp"

using namespace cdlat;

namespace {

std::vector<std::uint64_t> image_of(const Group& g) {
  return Analysis::of(g).cd.image;
}

}  // namespace

TEST_CASE("measures multiply order by centralizer order") {
  Group g = dihedral(8);
  SubgroupLattice lat = SubgroupLattice::enumerate(g);
  CHECK(cd_measure(g, Subgroup::trivial(g)) == 8);    // 1 * |G|
  CHECK(cd_measure(g, Subgroup::whole(g)) == 16);     // |G| * |Z|
  for (const Subgroup& h : lat.all()) {
    std::uint64_t m = cd_measure(g, h);
    CHECK(m == static_cast<std::uint64_t>(h.size()) *
                   centralizer(g, h).size());
  }
}

TEST_CASE("abelian measure images") {
  // In an abelian group every centralizer is everything, so the image is
  // {d * n : d divides n}.
  CHECK(image_of(cyclic(4)) == std::vector<std::uint64_t>{4, 8, 16});
  CHECK(image_of(cyclic(6)) == std::vector<std::uint64_t>{6, 12, 18, 36});
  CHECK(image_of(cyclic(12)) ==
        std::vector<std::uint64_t>{12, 24, 36, 48, 72, 144});
  CHECK(image_of(abelian_of_type(std::vector<int>{2, 2})) ==
        std::vector<std::uint64_t>{4, 8, 16});
}

TEST_CASE("S3: maximal measure picked out by the rotation subgroup") {
  Analysis a = Analysis::of(dihedral(6));
  CHECK(a.cd.image == std::vector<std::uint64_t>{4, 6, 9});
  CHECK(a.cd.m_star == 9);
  REQUIRE(a.cd.cd_members.size() == 1);
  CHECK(a.lattice.at(a.cd.cd_members[0]).size() == 3);
  CHECK(a.cd.cd_min == a.cd.cd_members[0]);
}

TEST_CASE("Q8: five subgroups share the maximal measure") {
  Analysis a = Analysis::of(generalized_quaternion(3));
  CHECK(a.cd.image == std::vector<std::uint64_t>{8, 16});
  CHECK(a.cd.m_star == 16);
  REQUIRE(a.cd.cd_members.size() == 5);
  // The minimum member is the center, of order 2.
  CHECK(a.lattice.at(a.cd.cd_min).size() == 2);
  CHECK(a.lattice.at(a.cd.cd_min).members == center(a.lattice.group()).members);
  // Middle members: the three cyclic subgroups of order 4.
  int fours = 0;
  for (int i : a.cd.cd_members)
    if (a.lattice.at(i).size() == 4) ++fours;
  CHECK(fours == 3);
  // The maximal-measure sets of Q8 and D8 have the same profile.
  Analysis d8 = Analysis::of(dihedral(8));
  CHECK(d8.cd.m_star == 16);
  CHECK(d8.cd.cd_members.size() == 5);
}

TEST_CASE("Q16: the cyclic maximal subgroup is the unique member") {
  Analysis a = Analysis::of(generalized_quaternion(4));
  CHECK(a.cd.m_star == 64);
  REQUIRE(a.cd.cd_members.size() == 1);
  const Subgroup& h = a.lattice.at(a.cd.cd_members[0]);
  CHECK(h.size() == 8);
  CHECK(is_abelian_subgroup(h));
  // m(<a>) = 8 * 8: the cyclic half is self-centralizing.
  CHECK(a.cd.measures[a.cd.cd_members[0]] == 64);
}

TEST_CASE("extraspecial 27: members are exactly the overgroups of the center") {
  Analysis a = Analysis::of(extraspecial(3, 1, '+'));
  const Group& g = a.lattice.group();
  CHECK(a.cd.image == std::vector<std::uint64_t>{27, 81});
  CHECK(a.cd.m_star == 81);
  CHECK(a.cd.cd_members.size() == 6);  // Z, four maximals, G
  Bitset z = center(g).members;
  for (int i = 0; i < a.lattice.size(); ++i) {
    bool contains_z = (a.lattice.at(i).members & z) == z;
    bool attains = std::binary_search(a.cd.cd_members.begin(),
                                      a.cd.cd_members.end(), i);
    CHECK(attains == contains_z);
    if (!contains_z) CHECK(a.cd.measures[i] == 27);
  }
  // The members form a quasi-antichain of width 4.
  CHECK(quasi_antichain_width(a.lattice, a.cd.cd_members) == 4);
}

TEST_CASE("centralizer indices are consistent") {
  for (Group& g : std::vector<Group>{dihedral(8), dihedral(12),
                                     generalized_quaternion(4),
                                     semidihedral(4), small_group_32_8()}) {
    INFO(g.label());
    Analysis a = Analysis::of(std::move(g));
    const Group& ag = *a.group;
    for (int i = 0; i < a.lattice.size(); ++i) {
      const int c = a.cd.centralizer_of[i];
      CHECK(a.lattice.at(c).members ==
            centralizer(ag, a.lattice.at(i)).members);
      // C(C(H)) contains H.
      CHECK(a.lattice.leq(i, a.cd.centralizer_of[c]));
    }
    // On the maximal-measure set the centralizer map is an involution.
    for (int i : a.cd.cd_members)
      CHECK(a.cd.centralizer_of[a.cd.centralizer_of[i]] == i);
  }
}

TEST_CASE("the minimum member is abelian, normal, and contains the center") {
  for (const Group& g :
       {dihedral(6), dihedral(8), dihedral(12), generalized_quaternion(4),
        cyclic(12), heisenberg(3), small_group_32_8()}) {
    INFO(g.label());
    SubgroupLattice lat = SubgroupLattice::enumerate(g);
    CDResult res = cd_result(lat);
    Subgroup m = cd_subgroup(lat, res);
    CHECK(is_abelian_subgroup(m));
    CHECK(is_normal(g, m));
    Bitset z = center(g).members;
    CHECK((m.members & z) == z);
    // It is the meet of all members.
    CHECK(lat.index_of(m.members) == res.cd_min);
  }
}

TEST_CASE("product sets") {
  Group g = dihedral(6);
  SubgroupLattice lat = SubgroupLattice::enumerate(g);
  const Bitset rot = lat.at(lat.of_order(3)[0]).members;
  const Bitset refl = lat.at(lat.of_order(2)[0]).members;
  // <r> * <s| has order 3 * 2 / 1 = 6: all of S3.
  CHECK(product_set(g, rot, refl).count() == 6);
  CHECK(product_set(g, rot, rot) == rot);
  // Two distinct reflection subgroups give a 4-element non-subgroup set.
  const Bitset refl2 = lat.at(lat.of_order(2)[1]).members;
  Bitset prod = product_set(g, refl, refl2);
  CHECK(prod.count() == 4);
  CHECK_FALSE(is_subgroup_bits(g, prod));
}

TEST_CASE("whole-group and trivial measures sit inside the image") {
  for (Group& g : std::vector<Group>{cyclic(8), dihedral(10),
                                     generalized_quaternion(3)}) {
    Analysis a = Analysis::of(std::move(g));
    const Group& ag = *a.group;
    const std::uint64_t n = static_cast<std::uint64_t>(ag.order());
    // m(1) = |G| and m(G) = |G||Z| both appear in the image, and the
    // maximum dominates |G||Z|. Individual measures may dip below |G|
    // (a reflection in D10 scores only 4).
    CHECK(std::find(a.cd.image.begin(), a.cd.image.end(), n) !=
          a.cd.image.end());
    const std::uint64_t gz = n * center(ag).size();
    CHECK(std::find(a.cd.image.begin(), a.cd.image.end(), gz) !=
          a.cd.image.end());
    CHECK(a.cd.m_star >= gz);
  }
}

TEST_CASE("analysis bundles stay valid after moves") {
  std::vector<Analysis> keep;
  for (int n : {4, 6, 8}) keep.push_back(Analysis::of(cyclic(n)));
  keep.erase(keep.begin());  // forces moves of the remaining bundles
  for (const Analysis& a : keep) {
    CHECK(&a.lattice.group() == a.group.get());
    CHECK(a.cd.m_star ==
          static_cast<std::uint64_t>(a.group->order()) * a.group->order());
  }
}
