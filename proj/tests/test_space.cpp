#include <doctest.h>

#include "fixlab/builders.hpp"
#include "fixlab/errors.hpp"
#include "fixlab/space.hpp"
#include "helpers.hpp"

using namespace fixlab;
using namespace fixlab::testhelp;

namespace {

bool has_axiom(const ValidationReport& r, const std::string& axiom) {
  for (const auto& v : r.violations)
    if (v.axiom == axiom) return true;
  return false;
}

}  // namespace

TEST_CASE("triangular truncation validates and has the expected geometry") {
  auto [space, family] = build_example23(5);
  CHECK(validate_space(space).ok);
  CHECK(space.points ==
        std::vector<std::string>{"1", "3", "6", "10", "15"});
  // consecutive gaps grow by one: d(x_n, x_{n+1}) = n + 1
  for (int n = 0; n + 1 < 5; ++n) CHECK(space.d(n, n + 1) == Rational(n + 2));
  CHECK(space.d(0, 2) == 5);
  CHECK(space.precedes(0, 4));
  CHECK(!space.precedes(4, 0));
  CHECK_NOTHROW(family.validate(space));
  CHECK(family.maps[0][3] == std::vector<PointIndex>{0});
  CHECK(family.maps[1][0] == std::vector<PointIndex>{0});
  CHECK(family.maps[1][1] == std::vector<PointIndex>{0});
  CHECK(family.maps[1][4] == std::vector<PointIndex>{0, 3});
  CHECK_THROWS_AS(build_example23(0), InvalidInstance);
}

TEST_CASE("order pair enumeration") {
  auto chain = line_space({0, 1, 2});
  CHECK(delta_pairs(chain, true).size() == 3);
  CHECK(delta_pairs(chain, false).size() == 6);
  auto loose = antichain_space({0, 1, 2});
  CHECK(delta_pairs(loose, true).empty());
  CHECK(delta_pairs(loose, false).size() == 3);
  auto [s4, f4] = build_example23(4);
  CHECK(delta_pairs(s4, true).size() == 6);
  CHECK(delta_pairs(s4, false).size() == 10);
}

TEST_CASE("label comparison is numeric when possible") {
  CHECK(label_less("3", "10"));
  CHECK(!label_less("10", "3"));
  CHECK(label_less("-2", "1"));
  CHECK(label_less("p03", "p10"));
  CHECK(!label_less("b", "a"));
}

TEST_CASE("index_of") {
  auto s = line_space({0, 2, 7});
  CHECK(s.index_of("2") == 1);
  CHECK(s.index_of("missing") == -1);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK_THROWS_AS(parse_rational(""), InvalidInstance);
  CHECK_THROWS_AS(parse_rational("x/y"), InvalidInstance);
}

TEST_CASE("dimension mismatch is an error, not a report entry") {
  auto s = line_space({0, 1});
  s.dist.pop_back();
  CHECK_THROWS_AS(validate_space(s), InvalidInstance);
  auto t = line_space({0, 1});
  t.strict_order.insert({0, 5});
  CHECK_THROWS_AS(validate_space(t), InvalidInstance);
}

TEST_CASE("axiom violations carry the offending tuple") {
  auto s = line_space({0, 2, 5});
  s.dist[0][2] = s.dist[2][0] = 10;
  auto r = validate_space(s);
  REQUIRE(!r.ok);
  CHECK(has_axiom(r, "metric_triangle"));
  bool located = false;
  for (const auto& v : r.violations)
    if (v.axiom == "metric_triangle" &&
        v.tuple == std::vector<PointIndex>{0, 1, 2})
      located = v.lhs == 10 && v.rhs == 5;
  CHECK(located);
}

TEST_CASE("generator is deterministic and produces valid spaces") {
  auto a = generate_instance(42, 7, 0.5);
  auto b = generate_instance(42, 7, 0.5);
  CHECK(a.points == b.points);
  CHECK(a.dist == b.dist);
  CHECK(a.strict_order == b.strict_order);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    int n = 2 + static_cast<int>(seed % 7);
    auto s = generate_instance(seed, n, 0.4);
    CHECK(validate_space(s).ok);
    auto fam = generate_family(seed, s, 1 + static_cast<int>(seed % 3));
    CHECK_NOTHROW(fam.validate(s));
  }
}

TEST_CASE("mutants are rejected with the named axiom") {
  auto expect_axiom = [](OrderedMetricSpace s, const std::string& axiom) {
    auto r = validate_space(s);
    REQUIRE_MESSAGE(!r.ok, axiom);
    CHECK_MESSAGE(has_axiom(r, axiom), axiom);
  };
  const auto base = line_space({0, 1, 3, 7});

  auto m1 = base; m1.dist[1][1] = 1;
  expect_axiom(m1, "metric_identity");
  auto m2 = base; m2.dist[0][1] = m2.dist[1][0] = -1;
  expect_axiom(m2, "metric_nonnegative");
  auto m3 = base; m3.dist[0][2] = m3.dist[2][0] = 0;
  expect_axiom(m3, "metric_separation");
  auto m4 = base; m4.dist[0][1] = 5;
  expect_axiom(m4, "metric_symmetry");
  auto m5 = base; m5.dist[0][3] = m5.dist[3][0] = 100;
  expect_axiom(m5, "metric_triangle");
  auto m6 = base; m6.dist[2][3] = m6.dist[3][2] = Rational(1, 1000000);
  expect_axiom(m6, "metric_triangle");
  auto m7 = base; m7.strict_order.insert({2, 2});
  expect_axiom(m7, "order_irreflexive");
  auto m8 = base; m8.strict_order.erase({0, 2});
  expect_axiom(m8, "order_transitive");
  auto m9 = base; m9.strict_order.insert({3, 0});  // cycle through the chain
  expect_axiom(m9, "order_transitive");
  auto m10 = antichain_space({0, 1, 3, 7});
  m10.strict_order.insert({0, 1});
  m10.strict_order.insert({1, 0});  // 2-cycle closes to a reflexive pair
  expect_axiom(m10, "order_transitive");
}
