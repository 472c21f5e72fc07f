#include "fixlab/space.hpp"

#include <cctype>
#include <sstream>

#include "fixlab/errors.hpp"

namespace fixlab {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InvalidInstance("empty rational literal");
  try {
    Rational r(text);
    return r;
  } catch (const std::exception&) {
    throw InvalidInstance("malformed rational literal: \"" + text + "\"");
  }
}

PointIndex OrderedMetricSpace::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (points[i] == label) return i;
  return -1;
}

bool label_less(const std::string& a, const std::string& b) {
  auto as_int = [](const std::string& s, long long& out) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (size_t k = i; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    try {
      out = std::stoll(s);
    } catch (const std::exception&) {
      return false;
    }
    return true;
  };
  long long va, vb;
  if (as_int(a, va) && as_int(b, vb)) return va < vb;
  return a < b;
}

ValidationReport validate_space(const OrderedMetricSpace& space) {
  const int n = space.size();
  if (static_cast<int>(space.dist.size()) != n)
    throw InvalidInstance("distance matrix has " +
                          std::to_string(space.dist.size()) + " rows, expected " +
                          std::to_string(n));
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(space.dist[i].size()) != n)
      throw InvalidInstance("distance matrix row " + std::to_string(i) +
                            " has wrong length");
  for (const auto& [a, b] : space.strict_order)
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw InvalidInstance("strict_order pair out of range");

  ValidationReport report;
  auto flag = [&](std::string axiom, std::vector<PointIndex> tuple,
                  Rational lhs, Rational rhs) {
    report.violations.push_back(
        {std::move(axiom), std::move(tuple), std::move(lhs), std::move(rhs)});
  };

  for (int i = 0; i < n; ++i) {
    if (space.dist[i][i] != 0)
      flag("metric_identity", {i, i}, space.dist[i][i], 0);
    for (int j = 0; j < n; ++j) {
      if (space.dist[i][j] < 0)
        flag("metric_nonnegative", {i, j}, space.dist[i][j], 0);
      if (i != j && space.dist[i][j] == 0)
        flag("metric_separation", {i, j}, space.dist[i][j], 0);
      if (i < j && space.dist[i][j] != space.dist[j][i])
        flag("metric_symmetry", {i, j}, space.dist[i][j], space.dist[j][i]);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational direct = space.dist[i][k];
        Rational via = space.dist[i][j] + space.dist[j][k];
        if (direct > via) flag("metric_triangle", {i, j, k}, direct, via);
      }

  for (const auto& [a, b] : space.strict_order)
    if (a == b) flag("order_irreflexive", {a, b}, 0, 0);
  for (const auto& [a, b] : space.strict_order)
    for (const auto& [c, e] : space.strict_order)
      if (b == c && !space.precedes(a, e) && a != e)
        flag("order_transitive", {a, b, e}, 0, 0);
  // a chain a < b, b < a closes to a reflexive pair under transitivity
  for (const auto& [a, b] : space.strict_order)
    if (a != b && space.precedes(b, a))
      flag("order_transitive", {a, b, a}, 0, 0);

  report.ok = report.violations.empty();
  return report;
}

std::set<OrderPair> delta_pairs(const OrderedMetricSpace& space, bool strict) {
  std::set<OrderPair> pairs = space.strict_order;
  if (!strict)
    for (int i = 0; i < space.size(); ++i) pairs.insert({i, i});
  return pairs;
}

}  // namespace fixlab
