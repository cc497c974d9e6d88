#include "cdlat/chermak_delgado.hpp"

#include <algorithm>
#include <string>

#include "cdlat/errors.hpp"

namespace cdlat {

std::uint64_t cd_measure(const Group& g, const Subgroup& h) {
  Subgroup c = centralizer(g, h);
  return static_cast<std::uint64_t>(h.size()) *
         static_cast<std::uint64_t>(c.size());
}

CDResult cd_result(const SubgroupLattice& lat) {
  const Group& g = lat.group();
  const int n = g.order();
  const int s = lat.size();

  std::vector<Bitset> elem_cent;
  elem_cent.reserve(n);
  for (int x = 0; x < n; ++x) elem_cent.push_back(g.element_centralizer(x));

  Bitset everything(n);
  for (int x = 0; x < n; ++x) everything.set(x);

  CDResult res;
  res.measures.resize(s);
  res.centralizer_of.resize(s);
  for (int i = 0; i < s; ++i) {
    Bitset cent = everything;
    for (int x : lat.generators_of(i)) cent &= elem_cent[x];
    const int c = lat.index_of(cent);
    if (c < 0) throw ContractError("centralizer missing from lattice");
    res.centralizer_of[i] = c;
    res.measures[i] = static_cast<std::uint64_t>(lat.at(i).size()) *
                      static_cast<std::uint64_t>(lat.at(c).size());
  }

  res.image = res.measures;
  std::sort(res.image.begin(), res.image.end());
  res.image.erase(std::unique(res.image.begin(), res.image.end()),
                  res.image.end());
  res.m_star = res.image.back();

  for (int i = 0; i < s; ++i)
    if (res.measures[i] == res.m_star) res.cd_members.push_back(i);

  if (!is_closed_sublattice(lat, res.cd_members))
    throw ContractError("measure-maximal subgroups are not meet/join-closed");

  int acc = res.cd_members[0];
  for (std::size_t i = 1; i < res.cd_members.size(); ++i)
    acc = lat.meet(acc, res.cd_members[i]);
  res.cd_min = acc;
  if (!std::binary_search(res.cd_members.begin(), res.cd_members.end(),
                          res.cd_min))
    throw ContractError("intersection of measure-maximal subgroups lost the "
                        "maximal measure");
  return res;
}

Subgroup cd_subgroup(const SubgroupLattice& lat, const CDResult& res) {
  const Group& g = lat.group();
  const Subgroup& m = lat.at(res.cd_min);
  if (!is_abelian_subgroup(m))
    throw ContractError("minimum measure-maximal subgroup is not abelian");
  if (!is_normal(g, m))
    throw ContractError("minimum measure-maximal subgroup is not normal");
  if (!center(g).members.subset_of(m.members))
    throw ContractError(
        "minimum measure-maximal subgroup does not contain the center");
  return m;
}

Bitset product_set(const Group& g, const Bitset& a_set, const Bitset& b_set) {
  Bitset out(g.order());
  for (int a = a_set.first_set(); a >= 0; a = a_set.next_set(a + 1))
    for (int b = b_set.first_set(); b >= 0; b = b_set.next_set(b + 1))
      out.set(g.mul(a, b));
  return out;
}

}  // namespace cdlat
