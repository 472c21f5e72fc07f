#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fixlab/contraction.hpp"

namespace fixlab {

enum class TerminalKind { FixedPoint, Stalled, CycleDetected, StepLimit };

struct OrbitStep {
  PointIndex point = 0;      // point the step leaves from
  int map_index = 0;         // 0-based map applied at this step
  PointIndex successor = 0;
  Rational d;                // d(point, successor), always positive
  double gauge_of_d = 0;     // F(d)
  std::optional<double> slack_used;  // empty on the unconstrained first step
};

struct OrbitTrace {
  std::vector<OrbitStep> steps;
  TerminalKind terminal = TerminalKind::StepLimit;
  PointIndex terminal_point = 0;
  std::string stall_reason;                       // set for Stalled
  std::vector<std::pair<PointIndex, int>> cycle;  // set for CycleDetected
  std::optional<int> n1;  // first index from which the rate bound holds
};

// Fix(T_i) by direct membership scan. Throws InvalidParameter on a bad index.
std::vector<PointIndex> fixed_points(const OrderedMetricSpace& space,
                                     const MapFamily& family, int i);

// Constructive iteration from the proofs. In Strong mode every recorded
// step is a strict-order pair selected by slack; in Existential mode the
// orbit may fall back to the minimal-distance successor when the hypothesis
// machinery does not engage. max_steps <= 0 selects |X|*m + 1.
OrbitTrace orbit(const OrderedMetricSpace& space, const MapFamily& family,
                 const Gauge& gauge, const Functional& functional, double tau,
                 PointIndex x0, int i0, int max_steps = 0,
                 Mode mode = Mode::Existential, double eps = default_eps());

struct DecrementReport {
  bool ok = true;
  std::optional<int> first_violation;  // step index n
  std::vector<double> bounds;          // F(d0) - n tau per step
};

// Per-step decrement: F(d_n) <= F(d_0) - n tau, within eps.
DecrementReport decrement_check(const OrbitTrace& trace, const Gauge& gauge,
                                double tau, double eps = default_eps());

struct RateBoundReport {
  std::optional<int> n1;  // none when the trace never witnesses the bound
  std::vector<double> values;  // n^{1/lambda} d_n, n = 1-based step index
};

// Smallest n1 with n^{1/lambda} d_n <= 1 for all recorded n >= n1.
RateBoundReport rate_bound_check(const OrbitTrace& trace, const Gauge& gauge);

// Every two distinct elements comparable under the strict order.
bool well_ordered(const OrderedMetricSpace& space,
                  const std::set<PointIndex>& subset);

struct TheoremReport {
  std::vector<std::set<PointIndex>> fix_sets;
  bool fix_sets_equal = false;
  std::set<PointIndex> common_fix;
  bool common_nonempty = false;
  bool well_ordered_common = false;
  bool singleton = false;
  bool conclusion3_biconditional = false;  // well_ordered_common == singleton
};

TheoremReport analyze(const OrderedMetricSpace& space, const MapFamily& family);

}  // namespace fixlab
