#include "cdlat/lattice.hpp"

#include <algorithm>
#include <string>

#include "cdlat/config.hpp"
#include "cdlat/errors.hpp"

namespace cdlat {

namespace {

struct Entry {
  Bitset members;
  std::vector<int> gens;

  Entry(Bitset m, std::vector<int> g)
      : members(std::move(m)), gens(std::move(g)) {}
};

}  // namespace

SubgroupLattice SubgroupLattice::enumerate(const Group& g) {
  const int n = g.order();
  std::vector<Entry> found;
  std::unordered_map<Bitset, int, BitsetHash> seen;

  auto add = [&](Bitset bits, std::vector<int> gens) {
    auto [it, fresh] = seen.emplace(std::move(bits), static_cast<int>(found.size()));
    if (!fresh) return;
    if (static_cast<int>(found.size()) >= limits::subgroup_cap())
      throw ResourceError("subgroup count exceeds subgroup cap " +
                          std::to_string(limits::subgroup_cap()));
    found.emplace_back(it->first, std::move(gens));
  };

  Bitset triv(n);
  triv.set(0);
  add(std::move(triv), {});
  for (int x = 1; x < n; ++x)
    add(closure(g, std::span<const int>(&x, 1)), {x});

  // Close under single-element extensions. found grows while we walk it;
  // generating sets stay small because each extension at least doubles the
  // subgroup.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (int x = 1; x < n; ++x) {
      if (found[i].members.test(x)) continue;
      std::vector<int> gens = found[i].gens;
      gens.push_back(x);
      Bitset k = closure(g, gens);
      add(std::move(k), std::move(gens));
    }
  }

  std::vector<int> order(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int ca = found[a].members.count(), cb = found[b].members.count();
    if (ca != cb) return ca < cb;
    return found[a].members.lex_before(found[b].members);
  });

  SubgroupLattice lat;
  lat.group_ = &g;
  lat.subs_.reserve(found.size());
  lat.gens_.reserve(found.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    Entry& e = found[order[pos]];
    lat.index_.emplace(e.members, static_cast<int>(pos));
    lat.subs_.push_back(Subgroup{&g, std::move(e.members)});
    lat.gens_.push_back(std::move(e.gens));
  }

  lat.build_incidence();
  lat.build_covers();
  return lat;
}

void SubgroupLattice::check_index(int i) const {
  if (i < 0 || i >= size())
    throw UsageError("subgroup index " + std::to_string(i) +
                     " out of range (lattice has " + std::to_string(size()) +
                     " subgroups)");
}

const Subgroup& SubgroupLattice::at(int i) const {
  check_index(i);
  return subs_[i];
}

const std::vector<int>& SubgroupLattice::generators_of(int i) const {
  check_index(i);
  return gens_[i];
}

int SubgroupLattice::index_of(const Bitset& members) const {
  auto it = index_.find(members);
  return it == index_.end() ? -1 : it->second;
}

void SubgroupLattice::build_incidence() {
  const int s = size();
  if (s > 8192) return;  // fall back to scans; quadratic bitsets get large
  asc_.assign(s, Bitset(s));
  desc_.assign(s, Bitset(s));
  for (int i = 0; i < s; ++i) {
    asc_[i].set(i);
    desc_[i].set(i);
    const int ci = subs_[i].size();
    for (int j = i + 1; j < s; ++j) {
      if (subs_[j].size() % ci != 0 || subs_[j].size() == ci) continue;
      if (subs_[i].members.subset_of(subs_[j].members)) {
        asc_[i].set(j);
        desc_[j].set(i);
      }
    }
  }
}

void SubgroupLattice::build_covers() {
  const int s = size();
  up_covers_.assign(s, {});
  low_covers_.assign(s, {});
  // Walk candidates largest-first: any subgroup strictly between i and j has
  // already been seen, so i is a cover exactly when it sits under no cover
  // found so far.
  for (int j = 0; j < s; ++j) {
    const int cj = subs_[j].size();
    for (int i = j - 1; i >= 0; --i) {
      const int ci = subs_[i].size();
      if (ci == cj || cj % ci != 0) continue;
      if (!subs_[i].members.subset_of(subs_[j].members)) continue;
      bool buried = false;
      for (int k : low_covers_[j])
        if (subs_[i].members.subset_of(subs_[k].members)) {
          buried = true;
          break;
        }
      if (!buried) {
        low_covers_[j].push_back(i);
        up_covers_[i].push_back(j);
      }
    }
    std::sort(low_covers_[j].begin(), low_covers_[j].end());
  }
}

bool SubgroupLattice::leq(int a, int b) const {
  check_index(a);
  check_index(b);
  return subs_[a].members.subset_of(subs_[b].members);
}

int SubgroupLattice::meet(int a, int b) const {
  check_index(a);
  check_index(b);
  int idx = index_of(subs_[a].members & subs_[b].members);
  if (idx < 0) throw ContractError("subgroup intersection missing from lattice");
  return idx;
}

int SubgroupLattice::join(int a, int b) const {
  check_index(a);
  check_index(b);
  if (!asc_.empty()) {
    // Indices ascend with order, so the lowest common ascendant is the
    // smallest subgroup containing both, i.e. the join.
    const int idx = (asc_[a] & asc_[b]).first_set();
    if (idx < 0) throw ContractError("join missing from lattice");
    return idx;
  }
  for (int j = std::max(a, b); j < size(); ++j)
    if (subs_[a].members.subset_of(subs_[j].members) &&
        subs_[b].members.subset_of(subs_[j].members))
      return j;
  throw ContractError("join missing from lattice");
}

const std::vector<int>& SubgroupLattice::upper_covers(int i) const {
  check_index(i);
  return up_covers_[i];
}

const std::vector<int>& SubgroupLattice::lower_covers(int i) const {
  check_index(i);
  return low_covers_[i];
}

std::vector<int> SubgroupLattice::maximal_subgroups() const {
  return low_covers_[whole_index()];
}

int SubgroupLattice::frattini_index() const {
  std::vector<int> maxes = maximal_subgroups();
  if (maxes.empty()) return whole_index();
  int acc = maxes[0];
  for (std::size_t i = 1; i < maxes.size(); ++i) acc = meet(acc, maxes[i]);
  return acc;
}

Subgroup SubgroupLattice::frattini_subgroup() const {
  return subs_[frattini_index()];
}

std::vector<int> SubgroupLattice::of_order(int order) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (subs_[i].size() == order) out.push_back(i);
  return out;
}

bool is_abelian_subgroup(const Subgroup& h) {
  const Group& g = *h.parent;
  std::vector<int> elems = h.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (g.mul(elems[i], elems[j]) != g.mul(elems[j], elems[i])) return false;
  return true;
}

bool is_closed_sublattice(const SubgroupLattice& lat, std::span<const int> s) {
  Bitset in_set(lat.size());
  for (int i : s) in_set.set(i);
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (!in_set.test(lat.meet(s[a], s[b]))) return false;
      if (!in_set.test(lat.join(s[a], s[b]))) return false;
    }
  return true;
}

namespace {

// Height of each member of the induced poset (longest chain up from the
// minimum), plus the induced cover relation; `s` must be sorted ascending.
struct InducedPoset {
  std::vector<int> height;
  std::vector<std::vector<int>> low_covers;  // positions into s
  bool graded = true;
};

InducedPoset induce(const SubgroupLattice& lat, std::span<const int> s) {
  const int k = static_cast<int>(s.size());
  InducedPoset p;
  p.height.assign(k, 0);
  p.low_covers.assign(k, {});
  for (int j = 0; j < k; ++j) {
    for (int i = j - 1; i >= 0; --i) {
      if (!lat.leq(s[i], s[j])) continue;
      bool buried = false;
      for (int c : p.low_covers[j])
        if (lat.leq(s[i], s[c])) {
          buried = true;
          break;
        }
      if (!buried) p.low_covers[j].push_back(i);
    }
    int h = 0;
    for (int c : p.low_covers[j]) h = std::max(h, p.height[c] + 1);
    p.height[j] = h;
    for (int c : p.low_covers[j])
      if (p.height[c] + 1 != h) p.graded = false;
  }
  return p;
}

}  // namespace

bool is_modular_sublattice(const SubgroupLattice& lat, std::span<const int> s) {
  std::vector<int> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (!is_closed_sublattice(lat, sorted))
    throw ContractError("modularity asked of a non-closed subgroup set");
  const int k = static_cast<int>(sorted.size());
  if (k <= 2) return true;

  InducedPoset p = induce(lat, sorted);
  if (!p.graded) return false;

  std::unordered_map<int, int> pos;
  for (int i = 0; i < k; ++i) pos.emplace(sorted[i], i);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const int m = pos.at(lat.meet(sorted[a], sorted[b]));
      const int j = pos.at(lat.join(sorted[a], sorted[b]));
      if (p.height[a] + p.height[b] != p.height[m] + p.height[j])
        return false;
    }
  return true;
}

std::optional<int> quasi_antichain_width(const SubgroupLattice& lat,
                                         std::span<const int> s) {
  if (s.empty()) return std::nullopt;
  std::vector<int> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  const int bottom = sorted.front(), top = sorted.back();
  for (int m : sorted)
    if (!lat.leq(bottom, m) || !lat.leq(m, top)) return std::nullopt;
  const int k = static_cast<int>(sorted.size());
  for (int a = 1; a + 1 < k; ++a)
    for (int b = a + 1; b + 1 < k; ++b)
      if (lat.leq(sorted[a], sorted[b]) || lat.leq(sorted[b], sorted[a]))
        return std::nullopt;
  return std::max(0, k - 2);
}

}  // namespace cdlat
