#include "cdlat/classify.hpp"

#include <algorithm>

#include "cdlat/errors.hpp"

namespace cdlat {

std::vector<PrimePower> factorize(int n) {
  if (n < 1) throw UsageError("factorize needs a positive integer");
  std::vector<PrimePower> out;
  for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::optional<PGroupInfo> p_group_info(const Group& g) {
  std::vector<PrimePower> f = factorize(g.order());
  if (f.size() != 1) return std::nullopt;
  return PGroupInfo{f[0].p, f[0].e};
}

bool in_class_c(const Analysis& a) {
  if (a.group->order() == 1)
    throw UsageError(
        "two-value class membership is undefined for the trivial group");
  return a.cd.image.size() == 2;
}

bool is_extraspecial(const Analysis& a) {
  if (!p_group_info(*a.group)) return false;
  const Bitset& z = center(*a.group).members;
  if (factorize(z.count()).size() != 1 || factorize(z.count())[0].e != 1)
    return false;  // |Z| must be prime
  if (z != commutator_subgroup(*a.group).members) return false;
  return z == a.lattice.frattini_subgroup().members;
}

bool is_outer_abelian(const Analysis& a) {
  const Group& g = *a.group;
  if (g.is_abelian()) return false;
  const Bitset& derived = commutator_subgroup(g).members;
  for (int i = 1; i < a.lattice.size(); ++i) {
    const Subgroup& h = a.lattice.at(i);
    if (derived.subset_of(h.members)) continue;
    if (is_normal(g, h)) return false;
  }
  return true;
}

bool is_maximal_class(const Group& g) {
  std::optional<PGroupInfo> info = p_group_info(g);
  if (!info)
    throw UsageError("maximal class is defined for p-groups only; '" +
                     g.label() + "' has order " + std::to_string(g.order()));
  if (info->n < 2) return false;
  std::optional<int> cls = nilpotence_class(g);
  return cls && *cls == info->n - 1;
}

std::optional<int> self_centralizing_p2(const Analysis& a) {
  std::optional<PGroupInfo> info = p_group_info(*a.group);
  if (!info)
    throw UsageError("self-centralizing p^2 search needs a p-group; '" +
                     a.group->label() + "' has order " +
                     std::to_string(a.group->order()));
  for (int i : a.lattice.of_order(info->p * info->p))
    if (a.cd.centralizer_of[i] == i) return i;
  return std::nullopt;
}

bool unique_subgroup_order_p(const Analysis& a) {
  std::optional<PGroupInfo> info = p_group_info(*a.group);
  if (!info)
    throw UsageError("unique order-p subgroup test needs a nontrivial "
                     "p-group; '" +
                     a.group->label() + "' has order " +
                     std::to_string(a.group->order()));
  return a.lattice.of_order(info->p).size() == 1;
}

bool has_unique_minimal_subgroup(const Analysis& a) {
  return a.lattice.upper_covers(a.lattice.trivial_index()).size() == 1;
}

bool q2n_fingerprint(const Analysis& a) {
  const Group& g = *a.group;
  std::optional<PGroupInfo> info = p_group_info(g);
  if (!info || info->p != 2 || info->n < 3) return false;
  if (g.is_abelian()) return false;
  int involutions = 0;
  for (int x = 1; x < g.order(); ++x)
    if (g.element_order(x) == 2) ++involutions;
  if (involutions != 1) return false;
  for (int i : a.lattice.of_order(g.order() / 2))
    if (is_cyclic_subgroup(a.lattice.at(i))) return true;
  return false;
}

std::optional<int> prop26_witness(const Analysis& a) {
  const Group& g = *a.group;
  std::optional<PGroupInfo> info = p_group_info(g);
  if (!info)
    throw UsageError("the abelian-subgroup bound applies to p-groups; '" +
                     g.label() + "' has order " + std::to_string(g.order()));
  if (g.is_abelian())
    throw UsageError("the abelian-subgroup bound applies to non-abelian "
                     "groups; '" +
                     g.label() + "' is abelian");
  long long bound = 1;
  for (int i = 0; i < (info->n + 3) / 2; ++i) bound *= info->p;
  for (int i = 0; i < a.lattice.size(); ++i) {
    const Subgroup& h = a.lattice.at(i);
    if (h.size() < bound) continue;
    if (is_abelian_subgroup(h)) return i;
  }
  return std::nullopt;
}

bool is_cyclic_subgroup(const Subgroup& h) {
  const int k = h.size();
  for (int x = h.members.first_set(); x >= 0; x = h.members.next_set(x + 1))
    if (h.parent->element_order(x) == k) return true;
  return false;
}

ClassificationReport classify_full(const Analysis& a) {
  const Group& g = *a.group;
  if (g.order() == 1)
    throw UsageError("classification targets nontrivial groups");

  ClassificationReport r;
  r.label = g.label();
  r.order = g.order();
  r.factorization = factorize(g.order());
  r.is_abelian = g.is_abelian();
  r.is_cyclic = g.is_cyclic();
  r.p_group = p_group_info(g);
  r.nilpotence = nilpotence_class(g);
  r.is_maximal_class = r.p_group && r.p_group->n >= 2 && is_maximal_class(g);
  r.is_extraspecial = is_extraspecial(a);
  r.is_outer_abelian = is_outer_abelian(a);
  r.has_unique_minimal_subgroup = has_unique_minimal_subgroup(a);
  r.in_class_c = in_class_c(a);
  r.measure_image = a.cd.image;
  if (r.p_group) {
    r.self_centralizing_p2 = self_centralizing_p2(a);
    if (!r.is_abelian) r.large_abelian_witness = prop26_witness(a);
  }

  if (r.is_extraspecial && (!r.p_group || r.nilpotence != 2))
    throw ContractError("extraspecial flag inconsistent with class/order");
  if (r.is_extraspecial && !r.is_outer_abelian)
    throw ContractError("extraspecial group not flagged outer abelian");
  return r;
}

}  // namespace cdlat
