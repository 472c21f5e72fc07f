#pragma once

#include <vector>

#include "fixlab/space.hpp"

namespace fixlab {

// Family of m multivalued maps over a space; maps[i][x] is the sorted set of
// point indices of the i-th map's value set at x. Indices are 0-based
// internally, with the cyclic successor convention: the successor of the
// last map is the first. On a finite metric space every nonempty value set
// is closed, so nonemptiness is the only structural requirement.
struct MapFamily {
  std::vector<std::vector<std::vector<PointIndex>>> maps;

  int count() const { return static_cast<int>(maps.size()); }
  int successor(int i) const { return (i + 1) % count(); }
  const std::vector<PointIndex>& values(int i, PointIndex x) const {
    return maps[i][x];
  }

  // Nonempty value sets, one value list per point, indices in range.
  // Throws InvalidInstance.
  void validate(const OrderedMetricSpace& space) const;
};

}  // namespace fixlab
