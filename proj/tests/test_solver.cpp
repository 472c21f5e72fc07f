#include <doctest.h>

#include <cmath>

#include "fixlab/builders.hpp"
#include "fixlab/errors.hpp"
#include "fixlab/solver.hpp"
#include "helpers.hpp"

using namespace fixlab;
using namespace fixlab::testhelp;

namespace {
const Gauge kLnId{GaugeKind::LnPlusId, 0.5};
const Functional kMax{};
}  // namespace

TEST_CASE("fixed point sets by membership scan") {
  auto [space, family] = build_example23(6);
  CHECK(fixed_points(space, family, 0) == std::vector<PointIndex>{0});
  CHECK(fixed_points(space, family, 1) == std::vector<PointIndex>{0});
  auto idf = identity_family(3, 2);
  auto chain = line_space({0, 1, 2});
  CHECK(fixed_points(chain, idf, 1) == std::vector<PointIndex>{0, 1, 2});
  auto shf = shift_family(3, 1);
  CHECK(fixed_points(chain, shf, 0).empty());
  CHECK_THROWS_AS(fixed_points(chain, idf, 2), InvalidParameter);
}

TEST_CASE("orbit descends the triangular example to the bottom point") {
  auto [space, family] = build_example23(6);  // 1, 3, 6, 10, 15, 21
  auto trace = orbit(space, family, kLnId, kMax, 1.0, 5, 1);
  REQUIRE(trace.terminal == TerminalKind::FixedPoint);
  CHECK(trace.terminal_point == 0);
  REQUIRE(trace.steps.size() == 2);
  CHECK(space.points[trace.steps[0].successor] == "15");  // nearer than 1
  CHECK(trace.steps[0].d == 6);
  CHECK(!trace.steps[0].slack_used.has_value());  // free first step
  CHECK(space.points[trace.steps[1].successor] == "1");
  CHECK(trace.steps[1].slack_used.has_value());
  CHECK(trace.n1 == rate_bound_check(trace, kLnId).n1);
}

TEST_CASE("orbit from a common fixed point records no steps") {
  auto [space, family] = build_example23(6);
  auto trace = orbit(space, family, kLnId, kMax, 1.0, 0, 0);
  CHECK(trace.terminal == TerminalKind::FixedPoint);
  CHECK(trace.terminal_point == 0);
  CHECK(trace.steps.empty());
}

TEST_CASE("orbit argument validation and step limit") {
  auto [space, family] = build_example23(6);
  CHECK_THROWS_AS(orbit(space, family, kLnId, kMax, 1.0, 9, 0),
                  InvalidParameter);
  CHECK_THROWS_AS(orbit(space, family, kLnId, kMax, 1.0, 0, 7),
                  InvalidParameter);
  auto trace = orbit(space, family, kLnId, kMax, 1.0, 5, 1, 1);
  CHECK(trace.terminal == TerminalKind::StepLimit);
  CHECK(trace.terminal_point == 4);
}

TEST_CASE("cyclic shift maps produce a detected cycle") {
  auto space = antichain_space({0, 1, 3});
  auto family = shift_family(3, 2);
  auto trace = orbit(space, family, kLnId, kMax, 1.0, 0, 0);
  CHECK(trace.terminal == TerminalKind::CycleDetected);
  CHECK(trace.cycle.size() == 6);  // every (point, map) state before repeat
  CHECK(trace.steps.size() == 6);
}

TEST_CASE("zero-distance stall in existential mode") {
  auto space = antichain_space({0, 1});
  MapFamily family;
  family.maps = {{{0}, {1}}, {{1}, {0}}};  // identity then swap
  auto trace = orbit(space, family, kLnId, kMax, 1.0, 0, 0);
  CHECK(trace.terminal == TerminalKind::Stalled);
  CHECK(trace.stall_reason == "zero-distance witness");
  CHECK(trace.steps.empty());
}

TEST_CASE("strong orbit refuses steps the proofs cannot take") {
  auto [space, family] = build_example23(6);
  // from the top point every map value lies below in the order
  auto trace =
      orbit(space, family, kLnId, kMax, 1.0, 5, 1, 0, Mode::Strong);
  CHECK(trace.terminal == TerminalKind::Stalled);
  CHECK(trace.stall_reason == "no admissible successor");
  // but a common fixed start still terminates cleanly
  auto fixed = orbit(space, family, kLnId, kMax, 1.0, 0, 0, 0, Mode::Strong);
  CHECK(fixed.terminal == TerminalKind::FixedPoint);
}

TEST_CASE("decrement check") {
  OrbitStep step;
  step.d = 2;
  step.gauge_of_d = kLnId.eval(2.0);
  OrbitTrace flat;
  flat.steps = {step, step};  // constant distance cannot satisfy the decrement
  auto rep = decrement_check(flat, kLnId, 1.0);
  CHECK(!rep.ok);
  CHECK(rep.first_violation == 1);
  REQUIRE(rep.bounds.size() == 2);
  CHECK(rep.bounds[1] == doctest::Approx(kLnId.eval(2.0) - 1.0));

  OrbitTrace empty;
  CHECK_THROWS_AS(decrement_check(empty, kLnId, 1.0), InvalidParameter);

  OrbitStep shrink;
  shrink.d = Rational(1, 10);
  OrbitTrace good;
  good.steps = {step, shrink};  // F(1/10) is far below F(2) - 1
  CHECK(decrement_check(good, kLnId, 1.0).ok);
}

TEST_CASE("rate bound index") {
  auto mk = [](std::vector<Rational> ds) {
    OrbitTrace t;
    for (auto& d : ds) {
      OrbitStep s;
      s.d = d;
      t.steps.push_back(s);
    }
    return t;
  };
  // n^2 d_n = 2, 1/2, 9/100: the bound holds from the second step on
  auto r = rate_bound_check(mk({2, Rational(1, 8), Rational(1, 100)}), kLnId);
  CHECK(r.n1 == 2);
  CHECK(r.values[0] == doctest::Approx(2.0));
  CHECK(r.values[1] == doctest::Approx(0.5));
  // never below 1 within the trace
  CHECK(!rate_bound_check(mk({5, 2, Rational(1, 2), Rational(1, 10)}), kLnId)
             .n1.has_value());
  CHECK(rate_bound_check(mk({Rational(1, 2)}), kLnId).n1 == 1);
  CHECK(!rate_bound_check(mk({}), kLnId).n1.has_value());
}

TEST_CASE("well-ordered subsets") {
  auto chain = line_space({0, 1, 2});
  CHECK(well_ordered(chain, {0, 2}));
  CHECK(well_ordered(chain, {}));
  CHECK(well_ordered(chain, {1}));
  auto loose = antichain_space({0, 1, 2});
  CHECK(!well_ordered(loose, {0, 1}));
  CHECK(well_ordered(loose, {2}));
}

TEST_CASE("fixed-point structure report") {
  auto [space, family] = build_example23(10);
  auto r = analyze(space, family);
  CHECK(r.fix_sets_equal);
  CHECK(r.common_fix == std::set<PointIndex>{0});
  CHECK(r.common_nonempty);
  CHECK(r.well_ordered_common);
  CHECK(r.singleton);
  CHECK(r.conclusion3_biconditional);

  auto chain = line_space({0, 1, 2});
  auto idr = analyze(chain, identity_family(3, 2));
  CHECK(idr.fix_sets_equal);
  CHECK(idr.common_fix.size() == 3);
  CHECK(idr.well_ordered_common);   // a chain is totally ordered
  CHECK(!idr.singleton);
  CHECK(!idr.conclusion3_biconditional);

  auto shr = analyze(chain, shift_family(3, 1));
  CHECK(!shr.common_nonempty);
}
