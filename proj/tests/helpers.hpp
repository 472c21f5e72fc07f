#pragma once

#include <vector>

#include "fixlab/family.hpp"
#include "fixlab/space.hpp"

namespace fixlab::testhelp {

// Points at rational coordinates on a line, Euclidean metric, usual total
// order on the (assumed increasing) coordinates.
inline OrderedMetricSpace line_space(const std::vector<Rational>& coords) {
  OrderedMetricSpace s;
  const int n = static_cast<int>(coords.size());
  for (const auto& c : coords) s.points.push_back(to_string(c));
  s.dist.assign(n, std::vector<Rational>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) s.dist[a][b] = abs(coords[a] - coords[b]);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) s.strict_order.insert({a, b});
  return s;
}

// Same metric, empty order.
inline OrderedMetricSpace antichain_space(const std::vector<Rational>& coords) {
  auto s = line_space(coords);
  s.strict_order.clear();
  return s;
}

inline MapFamily identity_family(int n, int m) {
  MapFamily f;
  f.maps.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int x = 0; x < n; ++x) f.maps[i].push_back({x});
  return f;
}

inline MapFamily constant_family(int n, int m, PointIndex target) {
  MapFamily f;
  f.maps.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int x = 0; x < n; ++x) f.maps[i].push_back({target});
  return f;
}

inline MapFamily shift_family(int n, int m) {
  MapFamily f;
  f.maps.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int x = 0; x < n; ++x) f.maps[i].push_back({(x + 1) % n});
  return f;
}

}  // namespace fixlab::testhelp
