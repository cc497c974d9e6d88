#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cdlat/bitset.hpp"
#include "cdlat/group.hpp"

namespace cdlat {

// The complete subgroup lattice of a finite group.
//
// Subgroups are indexed 0..size()-1, sorted by (order, lexicographic member
// set), so index 0 is the trivial subgroup, the last index is the whole
// group, and the numbering is identical across runs. The Group must outlive
// the lattice (non-owning pointer).
//
// For lattices of at most 8192 subgroups, ascendant/descendant incidence
// bitsets are precomputed, making meet/join/cover queries cheap; above that
// the same queries fall back to linear scans.
class SubgroupLattice {
 public:
  // Enumerates every subgroup: all cyclic subgroups are collected, then the
  // family is closed under single-element extensions H -> <H, x>. Every
  // subgroup <g1,...,gt> is reached through the chain of prefixes, so the
  // result is complete. Throws ResourceError past the configured subgroup
  // cap.
  static SubgroupLattice enumerate(const Group& g);

  const Group& group() const { return *group_; }
  int size() const { return static_cast<int>(subs_.size()); }
  const Subgroup& at(int i) const;
  const std::vector<Subgroup>& all() const { return subs_; }

  // A small generating set recorded during enumeration (empty for the
  // trivial subgroup).
  const std::vector<int>& generators_of(int i) const;

  // Index of the subgroup with exactly these members, or -1 if the set is
  // not a subgroup.
  int index_of(const Bitset& members) const;

  int trivial_index() const { return 0; }
  int whole_index() const { return size() - 1; }

  bool leq(int a, int b) const;  // containment
  int meet(int a, int b) const;  // intersection
  int join(int a, int b) const;  // smallest subgroup containing both

  // Hasse diagram neighbours: j is an upper cover of i when i < j with no
  // subgroup strictly between.
  const std::vector<int>& upper_covers(int i) const;
  const std::vector<int>& lower_covers(int i) const;

  // Lower covers of the whole group.
  std::vector<int> maximal_subgroups() const;

  // Intersection of all maximal subgroups (the whole group when there are
  // none, i.e. for the trivial group).
  int frattini_index() const;
  Subgroup frattini_subgroup() const;

  // Indices of all subgroups of the given order, ascending.
  std::vector<int> of_order(int order) const;

 private:
  SubgroupLattice() = default;
  void check_index(int i) const;
  void build_incidence();
  void build_covers();

  const Group* group_ = nullptr;
  std::vector<Subgroup> subs_;
  std::vector<std::vector<int>> gens_;
  std::unordered_map<Bitset, int, BitsetHash> index_;
  std::vector<Bitset> asc_;  // asc_[i] bit j set iff i <= j; empty if skipped
  std::vector<Bitset> desc_;
  std::vector<std::vector<int>> up_covers_;
  std::vector<std::vector<int>> low_covers_;
};

bool is_abelian_subgroup(const Subgroup& h);

// True when the index set is closed under meet and join.
bool is_closed_sublattice(const SubgroupLattice& lat, std::span<const int> s);

// Modularity of a meet/join-closed index set, decided on the induced poset:
// the set must be graded and its rank function must satisfy
// r(x) + r(y) = r(x meet y) + r(x join y) for every pair, which
// characterizes modular finite lattices. Throws ContractError if the set is
// not closed.
bool is_modular_sublattice(const SubgroupLattice& lat, std::span<const int> s);

// If the induced poset on the index set is a bounded poset whose non-extreme
// members are pairwise incomparable (bottom < antichain < top), returns the
// antichain's width; otherwise nullopt. A chain of length <= 1 counts as
// width 0.
std::optional<int> quasi_antichain_width(const SubgroupLattice& lat,
                                         std::span<const int> s);

}  // namespace cdlat
