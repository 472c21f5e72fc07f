#include <doctest.h>

#include <cmath>

#include "fixlab/errors.hpp"
#include "fixlab/gauge.hpp"

using namespace fixlab;

TEST_CASE("gauge evaluation") {
  Gauge lnid{GaugeKind::LnPlusId, 0.5};
  CHECK(lnid.eval(1.0) == doctest::Approx(1.0));
  CHECK(lnid.eval(2.0) == doctest::Approx(std::log(2.0) + 2.0));
  CHECK(Gauge{GaugeKind::Ln, 0.5}.eval(1.0) == doctest::Approx(0.0));
  CHECK(Gauge{GaugeKind::NegInvSqrt, 0.75}.eval(4.0) == doctest::Approx(-0.5));
  CHECK_THROWS_AS(lnid.eval(0.0), DomainError);
  CHECK_THROWS_AS(lnid.eval(-2.0), DomainError);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((Gauge{GaugeKind::LnPlusId, 0.0}.validate()), InvalidParameter);
  CHECK_THROWS_AS((Gauge{GaugeKind::LnPlusId, 1.0}.validate()), InvalidParameter);
  CHECK_THROWS_AS((Gauge{GaugeKind::NegInvSqrt, 0.5}.validate()), InvalidParameter);
  CHECK_NOTHROW((Gauge{GaugeKind::NegInvSqrt, 0.75}.validate()));
  CHECK_NOTHROW((Gauge{GaugeKind::Ln, 0.25}.validate()));
}

TEST_CASE("kind names round-trip") {
  for (auto k : {GaugeKind::LnPlusId, GaugeKind::Ln, GaugeKind::NegInvSqrt})
    CHECK(gauge_kind_from_string(gauge_kind_to_string(k)) == k);
  CHECK_THROWS_AS(gauge_kind_from_string("exp"), InvalidInstance);
}

TEST_CASE("axiom outcomes for the shipped gauges") {
  CHECK(check_axioms(Gauge{GaugeKind::LnPlusId, 0.5}, 64).ok());
  CHECK(check_axioms(Gauge{GaugeKind::Ln, 0.5}, 64).ok());
  CHECK(check_axioms(Gauge{GaugeKind::NegInvSqrt, 0.75}, 64).ok());

  // the sqrt-rate gauge needs lambda > 1/2 for the tail-flattening condition
  auto bad_lambda = check_axioms([](double a) { return -1.0 / std::sqrt(a); },
                                 0.25, 64);
  CHECK(bad_lambda.f1_ok);
  CHECK(bad_lambda.f2_ok);
  CHECK(!bad_lambda.f3_ok);

  // bounded-below increasing function: fails only the divergence condition
  auto identity = check_axioms([](double a) { return a; }, 0.5, 64);
  CHECK(identity.f1_ok);
  CHECK(!identity.f2_ok);
  CHECK(identity.f3_ok);

  auto decreasing = check_axioms([](double a) { return -a; }, 0.5, 64);
  CHECK(!decreasing.f1_ok);

  CHECK_THROWS_AS(check_axioms([](double a) { return a; }, 0.5, 4),
                  InvalidParameter);
}

TEST_CASE("axiom reports carry witnessing samples") {
  auto r = check_axioms(Gauge{GaugeKind::Ln, 0.5}, 64);
  REQUIRE(r.f1_samples.size() == 64);
  CHECK(r.f2_samples.back().second < -20.0);
  CHECK(r.f3_samples.back().second < 1e-6);
}
