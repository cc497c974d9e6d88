#pragma once

#include <cstdint>
#include <vector>

#include "cdlat/group.hpp"
#include "cdlat/lattice.hpp"

namespace cdlat {

// Measure data for one group, indexed like its subgroup lattice.
struct CDResult {
  std::vector<std::uint64_t> measures;  // measures[i] = |H_i| * |C(H_i)|
  std::vector<int> centralizer_of;      // lattice index of C(H_i)
  std::vector<std::uint64_t> image;     // distinct measure values, ascending
  std::uint64_t m_star = 0;             // max of image
  std::vector<int> cd_members;          // indices attaining m_star, ascending
  int cd_min = -1;                      // intersection of all cd_members
};

// |H| * |C_G(H)|.
std::uint64_t cd_measure(const Group& g, const Subgroup& h);

// Computes every measure over the full lattice. The attaining set is checked
// to be meet/join-closed and to contain its own intersection before
// returning; a failure there signals an enumeration bug (ContractError),
// not bad input.
CDResult cd_result(const SubgroupLattice& lat);

// The minimum member of the attaining set, asserted abelian, normal, and
// containing the center (ContractError on violation).
Subgroup cd_subgroup(const SubgroupLattice& lat, const CDResult& res);

// Setwise product {a*b : a in a_set, b in b_set}.
Bitset product_set(const Group& g, const Bitset& a_set, const Bitset& b_set);

}  // namespace cdlat
