#include "cdlat/analysis.hpp"

#include <utility>

namespace cdlat {

Analysis Analysis::of(std::shared_ptr<const Group> g) {
  SubgroupLattice lat = SubgroupLattice::enumerate(*g);
  CDResult cd = cd_result(lat);
  return Analysis{std::move(g), std::move(lat), std::move(cd)};
}

Analysis Analysis::of(Group g) {
  return of(std::make_shared<const Group>(std::move(g)));
}

}  // namespace cdlat
