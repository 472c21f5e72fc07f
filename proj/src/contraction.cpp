#include "fixlab/contraction.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>

#include "fixlab/errors.hpp"

namespace fixlab {

void MapFamily::validate(const OrderedMetricSpace& space) const {
  if (maps.empty()) throw InvalidInstance("family must contain at least one map");
  const int n = space.size();
  for (int i = 0; i < count(); ++i) {
    if (static_cast<int>(maps[i].size()) != n)
      throw InvalidInstance("map " + std::to_string(i + 1) +
                            " is not total over the point set");
    for (int x = 0; x < n; ++x) {
      if (maps[i][x].empty())
        throw InvalidInstance("map " + std::to_string(i + 1) + " at point \"" +
                              space.points[x] + "\" has an empty value set");
      for (PointIndex v : maps[i][x])
        if (v < 0 || v >= n)
          throw InvalidInstance("map value index out of range");
    }
  }
}

Mode mode_from_string(const std::string& s) {
  if (s == "existential") return Mode::Existential;
  if (s == "strong") return Mode::Strong;
  throw InvalidInstance("unknown mode: \"" + s + "\"");
}

std::string mode_to_string(Mode m) {
  return m == Mode::Existential ? "existential" : "strong";
}

double default_eps() {
  static const double eps = [] {
    if (const char* env = std::getenv("FIXLAB_EPS")) {
      char* end = nullptr;
      double v = std::strtod(env, &end);
      if (end != env && v > 0) return v;
    }
    return 1e-9;
  }();
  return eps;
}

bool exp_form_holds(double d, double m, double tau, double eps) {
  double lhs = d * std::exp(d - m);
  double rhs = std::exp(-tau) * m;
  return lhs <= rhs + eps * std::max(1.0, std::fabs(rhs));
}

namespace {

// Finite slack of a bound witness; -inf when M degenerates to zero (only
// possible for linear variants with vanishing coefficients).
double bound_slack(const OrderedMetricSpace& space, const Gauge& gauge,
                   const Functional& functional, PointIndex x, PointIndex y,
                   PointIndex ux, PointIndex uy, double& d_out, double& m_out) {
  const Rational& dr = space.d(ux, uy);
  assert(dr > 0);  // strict-order pairs are distinct, separation forces d > 0
  Rational mr = m_value(functional, space, x, y, ux, uy);
  d_out = to_double(dr);
  m_out = to_double(mr);
  if (functional.variant == FunctionalVariant::MMax) assert(mr > 0);
  if (mr == 0) return -kInfSlack;
  return gauge.eval(m_out) - gauge.eval(d_out);
}

struct Candidate {
  PointIndex uy;
  double slack;
  double dist;
  double m;
};

// Best admissible witness under the mode's rules, or nothing when the tuple
// cannot engage the hypothesis at all (Strong mode with neither a
// zero-distance nor a strict-order successor).
std::optional<Candidate> best_witness(const OrderedMetricSpace& space,
                                      const MapFamily& family,
                                      const Gauge& gauge,
                                      const Functional& functional, int i,
                                      PointIndex x, PointIndex y, PointIndex ux,
                                      Mode mode) {
  std::optional<Candidate> best;
  auto better = [&](const Candidate& c) {
    if (!best) return true;
    if (c.slack != best->slack) return c.slack > best->slack;
    return label_less(space.points[c.uy], space.points[best->uy]);
  };
  for (PointIndex uy : family.values(family.successor(i), y)) {
    bool strict_pair = space.precedes(ux, uy);
    Candidate c{uy, 0, 0, 0};
    if (mode == Mode::Existential) {
      if (strict_pair)
        c.slack = bound_slack(space, gauge, functional, x, y, ux, uy, c.dist, c.m);
      else
        c.slack = kInfSlack;
    } else {
      if (space.d(ux, uy) == 0)
        c.slack = kInfSlack;
      else if (strict_pair)
        c.slack = bound_slack(space, gauge, functional, x, y, ux, uy, c.dist, c.m);
      else
        continue;  // not a step the proofs can take
    }
    if (better(c)) best = c;
  }
  return best;
}

template <typename Fn>
void for_each_tuple(const OrderedMetricSpace& space, const MapFamily& family,
                    Fn&& fn) {
  auto delta1 = delta_pairs(space, false);
  for (int i = 0; i < family.count(); ++i)
    for (const auto& [x, y] : delta1)
      for (PointIndex ux : family.values(i, x)) fn(i, x, y, ux);
}

WitnessEntry make_entry(const OrderedMetricSpace& space,
                        const MapFamily& family, const Gauge& gauge,
                        const Functional& functional, int i, PointIndex x,
                        PointIndex y, PointIndex ux, Mode mode) {
  WitnessEntry entry;
  entry.i = i;
  entry.x = x;
  entry.y = y;
  entry.ux = ux;
  auto best = best_witness(space, family, gauge, functional, i, x, y, ux, mode);
  if (best) {
    entry.uy = best->uy;
    entry.slack = best->slack;
    entry.dist = best->dist;
    entry.m = best->m;
  } else {
    entry.slack = kInfSlack;
  }
  return entry;
}

bool entry_passes(const WitnessEntry& entry, double tau, double eps,
                  CheckForm form) {
  if (std::isinf(entry.slack)) return entry.slack > 0;
  if (form == CheckForm::Log) return tau <= entry.slack + eps;
  return exp_form_holds(entry.dist, entry.m, tau, eps);
}

}  // namespace

WitnessEntry slack(const OrderedMetricSpace& space, const MapFamily& family,
                   const Gauge& gauge, const Functional& functional, int i,
                   PointIndex x, PointIndex y, PointIndex ux, Mode mode) {
  if (i < 0 || i >= family.count())
    throw InvalidParameter("map index out of range");
  if (!space.comparable_leq(x, y))
    throw InvalidParameter("(x, y) is not an order pair");
  const auto& values = family.values(i, x);
  if (std::find(values.begin(), values.end(), ux) == values.end())
    throw InvalidParameter("ux is not a value of the map at x");
  return make_entry(space, family, gauge, functional, i, x, y, ux, mode);
}

Certificate check_family(const OrderedMetricSpace& space,
                         const MapFamily& family, const Gauge& gauge,
                         const Functional& functional, double tau, Mode mode,
                         double eps, CheckForm form) {
  if (!(tau > 0)) throw InvalidParameter("tau must be positive");
  if (form == CheckForm::Exp && gauge.kind != GaugeKind::LnPlusId)
    throw InvalidParameter("exp form is only defined for the ln_plus_id gauge");
  family.validate(space);
  functional.validate();
  gauge.validate();

  Certificate cert;
  cert.tau = tau;
  cert.mode = mode;
  cert.tau_star = kInfSlack;
  for_each_tuple(space, family, [&](int i, PointIndex x, PointIndex y,
                                    PointIndex ux) {
    WitnessEntry entry =
        make_entry(space, family, gauge, functional, i, x, y, ux, mode);
    cert.tau_star = std::min(cert.tau_star, entry.slack);
    if (!entry_passes(entry, tau, eps, form)) cert.violations.push_back(entry);
    cert.witness_table.push_back(std::move(entry));
  });
  cert.passes = cert.violations.empty();
  return cert;
}

double max_tau(const OrderedMetricSpace& space, const MapFamily& family,
               const Gauge& gauge, const Functional& functional, Mode mode) {
  family.validate(space);
  functional.validate();
  gauge.validate();
  double result = kInfSlack;
  for_each_tuple(space, family, [&](int i, PointIndex x, PointIndex y,
                                    PointIndex ux) {
    WitnessEntry entry =
        make_entry(space, family, gauge, functional, i, x, y, ux, mode);
    result = std::min(result, entry.slack);
  });
  return result;
}

}  // namespace fixlab
