#pragma once

#include <cstdint>

#include "fixlab/family.hpp"
#include "fixlab/space.hpp"

namespace fixlab {

// Truncation of the triangular-number space with the usual total order:
// points x_n = n(n+1)/2 for n = 1..N, Euclidean metric, T_1 constant to
// x_1 and T_2(x_n) = {x_1, x_{n-1}}. Both maps stay inside the truncation.
// Throws InvalidInstance for N < 1.
std::pair<OrderedMetricSpace, MapFamily> build_example23(int N);

// Deterministic random space: metric from all-pairs shortest paths of a
// connected positive-weight graph, strict order as the transitive closure
// of a density-thinned subset of a random linear order.
OrderedMetricSpace generate_instance(std::uint64_t seed, int n,
                                     double order_density);

// Deterministic random family of m maps with nonempty value sets.
MapFamily generate_family(std::uint64_t seed, const OrderedMetricSpace& space,
                          int m);

}  // namespace fixlab
