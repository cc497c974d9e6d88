#pragma once

#include <memory>

#include "cdlat/chermak_delgado.hpp"
#include "cdlat/group.hpp"
#include "cdlat/lattice.hpp"

namespace cdlat {

// One group with its lattice and measure data computed. The group lives in a
// shared_ptr so the lattice's internal parent pointers survive moves of the
// whole bundle.
struct Analysis {
  std::shared_ptr<const Group> group;
  SubgroupLattice lattice;
  CDResult cd;

  static Analysis of(std::shared_ptr<const Group> g);
  static Analysis of(Group g);
};

}  // namespace cdlat
