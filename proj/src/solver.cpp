#include "fixlab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fixlab/errors.hpp"

namespace fixlab {

std::vector<PointIndex> fixed_points(const OrderedMetricSpace& space,
                                     const MapFamily& family, int i) {
  if (i < 0 || i >= family.count())
    throw InvalidParameter("map index out of range");
  std::vector<PointIndex> fixed;
  for (PointIndex x = 0; x < space.size(); ++x) {
    const auto& values = family.values(i, x);
    if (std::find(values.begin(), values.end(), x) != values.end())
      fixed.push_back(x);
  }
  return fixed;
}

namespace {

bool common_fixed(const OrderedMetricSpace& space, const MapFamily& family,
                  PointIndex p) {
  for (int i = 0; i < family.count(); ++i) {
    const auto& values = family.values(i, p);
    if (std::find(values.begin(), values.end(), p) == values.end())
      return false;
  }
  return true;
}

// Slack of one candidate successor along the proof tuple
// (x = predecessor, y = current, ux = current, uy = candidate).
double candidate_slack(const OrderedMetricSpace& space, const Gauge& gauge,
                       const Functional& functional, PointIndex prev,
                       PointIndex p, PointIndex u) {
  double d = to_double(space.d(p, u));
  Rational mr = m_value(functional, space, prev, p, p, u);
  if (mr == 0) return -kInfSlack;
  return gauge.eval(to_double(mr)) - gauge.eval(d);
}

}  // namespace

OrbitTrace orbit(const OrderedMetricSpace& space, const MapFamily& family,
                 const Gauge& gauge, const Functional& functional, double tau,
                 PointIndex x0, int i0, int max_steps, Mode mode, double eps) {
  if (x0 < 0 || x0 >= space.size())
    throw InvalidParameter("start point out of range");
  if (i0 < 0 || i0 >= family.count())
    throw InvalidParameter("start map index out of range");
  if (max_steps <= 0) max_steps = space.size() * family.count() + 1;

  OrbitTrace trace;
  PointIndex p = x0;
  int j = i0;
  PointIndex prev = -1;
  std::map<std::pair<PointIndex, int>, int> visited;
  std::vector<std::pair<PointIndex, int>> states;

  while (true) {
    if (common_fixed(space, family, p)) {
      trace.terminal = TerminalKind::FixedPoint;
      trace.terminal_point = p;
      break;
    }
    auto state = std::make_pair(p, j);
    if (auto it = visited.find(state); it != visited.end()) {
      trace.terminal = TerminalKind::CycleDetected;
      trace.terminal_point = p;
      trace.cycle.assign(states.begin() + it->second, states.end());
      break;
    }
    visited[state] = static_cast<int>(states.size());
    states.push_back(state);
    if (static_cast<int>(trace.steps.size()) >= max_steps) {
      trace.terminal = TerminalKind::StepLimit;
      trace.terminal_point = p;
      break;
    }

    const auto& candidates = family.values(j, p);
    PointIndex chosen = -1;
    std::optional<double> slack_used;

    if (prev >= 0) {
      // proof selection: strict-order successor whose slack clears tau
      for (PointIndex u : candidates) {
        if (!space.precedes(p, u)) continue;
        double s = candidate_slack(space, gauge, functional, prev, p, u);
        if (s < tau - eps) continue;
        if (chosen < 0 || s > *slack_used ||
            (s == *slack_used && label_less(space.points[u], space.points[chosen]))) {
          chosen = u;
          slack_used = s;
        }
      }
    } else if (mode == Mode::Strong) {
      // free first step, restricted to strict-order successors so the next
      // tuple lands in the order relation
      for (PointIndex u : candidates) {
        if (!space.precedes(p, u)) continue;
        if (chosen < 0 || space.d(p, u) < space.d(p, chosen) ||
            (space.d(p, u) == space.d(p, chosen) &&
             label_less(space.points[u], space.points[chosen])))
          chosen = u;
      }
      slack_used.reset();
    }

    if (chosen < 0) {
      bool zero_distance =
          std::find(candidates.begin(), candidates.end(), p) != candidates.end();
      if (zero_distance) {
        trace.terminal = TerminalKind::Stalled;
        trace.terminal_point = p;
        trace.stall_reason = "zero-distance witness";
        break;
      }
      if (mode == Mode::Strong) {
        trace.terminal = TerminalKind::Stalled;
        trace.terminal_point = p;
        trace.stall_reason = "no admissible successor";
        break;
      }
      // existential fallback: minimal-distance successor
      for (PointIndex u : candidates) {
        if (chosen < 0 || space.d(p, u) < space.d(p, chosen) ||
            (space.d(p, u) == space.d(p, chosen) &&
             label_less(space.points[u], space.points[chosen])))
          chosen = u;
      }
      if (prev >= 0)
        slack_used = candidate_slack(space, gauge, functional, prev, p, chosen);
      else
        slack_used.reset();
    }

    OrbitStep step;
    step.point = p;
    step.map_index = j;
    step.successor = chosen;
    step.d = space.d(p, chosen);
    step.gauge_of_d = gauge.eval(to_double(step.d));
    step.slack_used = slack_used;
    trace.steps.push_back(std::move(step));

    prev = p;
    p = chosen;
    j = family.successor(j);
  }

  trace.n1 = rate_bound_check(trace, gauge).n1;
  return trace;
}

DecrementReport decrement_check(const OrbitTrace& trace, const Gauge& gauge,
                                double tau, double eps) {
  DecrementReport report;
  if (trace.steps.empty() || !(to_double(trace.steps.front().d) > 0))
    throw InvalidParameter("trace needs a positive-distance first step");
  double f0 = gauge.eval(to_double(trace.steps.front().d));
  for (size_t n = 0; n < trace.steps.size(); ++n) {
    double bound = f0 - static_cast<double>(n) * tau;
    report.bounds.push_back(bound);
    double dn = to_double(trace.steps[n].d);
    if (!(dn > 0)) continue;
    if (gauge.eval(dn) > bound + eps) {
      report.ok = false;
      if (!report.first_violation) report.first_violation = static_cast<int>(n);
    }
  }
  return report;
}

RateBoundReport rate_bound_check(const OrbitTrace& trace, const Gauge& gauge) {
  RateBoundReport report;
  const int T = static_cast<int>(trace.steps.size());
  if (T == 0) return report;
  int last_fail = 0;  // 1-based step index of the last bound failure
  for (int n = 1; n <= T; ++n) {
    double dn = to_double(trace.steps[n - 1].d);
    double v = std::pow(static_cast<double>(n), 1.0 / gauge.lambda) * dn;
    report.values.push_back(v);
    if (v > 1.0) last_fail = n;
  }
  if (last_fail < T) report.n1 = last_fail + 1;
  return report;
}

bool well_ordered(const OrderedMetricSpace& space,
                  const std::set<PointIndex>& subset) {
  for (PointIndex a : subset)
    for (PointIndex b : subset)
      if (a < b && !space.precedes(a, b) && !space.precedes(b, a)) return false;
  return true;
}

TheoremReport analyze(const OrderedMetricSpace& space,
                      const MapFamily& family) {
  TheoremReport report;
  for (int i = 0; i < family.count(); ++i) {
    auto fixed = fixed_points(space, family, i);
    report.fix_sets.emplace_back(fixed.begin(), fixed.end());
  }
  report.fix_sets_equal = std::all_of(
      report.fix_sets.begin(), report.fix_sets.end(),
      [&](const auto& s) { return s == report.fix_sets.front(); });
  report.common_fix = report.fix_sets.front();
  for (const auto& s : report.fix_sets) {
    std::set<PointIndex> inter;
    std::set_intersection(report.common_fix.begin(), report.common_fix.end(),
                          s.begin(), s.end(),
                          std::inserter(inter, inter.begin()));
    report.common_fix = std::move(inter);
  }
  report.common_nonempty = !report.common_fix.empty();
  report.well_ordered_common = well_ordered(space, report.common_fix);
  report.singleton = report.common_fix.size() == 1;
  report.conclusion3_biconditional =
      report.well_ordered_common == report.singleton;
  return report;
}

}  // namespace fixlab
