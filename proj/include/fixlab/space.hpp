#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fixlab/rational.hpp"

namespace fixlab {

using PointIndex = int;
using OrderPair = std::pair<PointIndex, PointIndex>;

// Finite partially ordered metric space. Points carry opaque string labels,
// distances are exact rationals, and the strict order is stored explicitly
// as the set of pairs (a, b) with a before b. The reflexive closure is
// derived, never stored.
struct OrderedMetricSpace {
  std::vector<std::string> points;
  std::vector<std::vector<Rational>> dist;
  std::set<OrderPair> strict_order;

  int size() const { return static_cast<int>(points.size()); }
  const Rational& d(PointIndex a, PointIndex b) const { return dist[a][b]; }
  bool precedes(PointIndex a, PointIndex b) const {
    return strict_order.count({a, b}) != 0;
  }
  // (a, b) comparable with a before-or-equal b.
  bool comparable_leq(PointIndex a, PointIndex b) const {
    return a == b || precedes(a, b);
  }
  // -1 when the label is unknown.
  PointIndex index_of(const std::string& label) const;
};

struct ValidationIssue {
  std::string axiom;            // e.g. "metric_triangle", "order_transitive"
  std::vector<PointIndex> tuple;
  Rational lhs;
  Rational rhs;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> violations;
};

// Exhaustive check of the four metric axioms and the two strict-order
// axioms. Throws InvalidInstance on a dimension mismatch; axiom failures
// are report content, not errors.
ValidationReport validate_space(const OrderedMetricSpace& space);

// strict=true returns the strict pairs, strict=false adds the diagonal.
std::set<OrderPair> delta_pairs(const OrderedMetricSpace& space, bool strict);

// Compares two labels, numerically when both parse as integers. Used for
// every deterministic tie-break in the library.
bool label_less(const std::string& a, const std::string& b);

}  // namespace fixlab
