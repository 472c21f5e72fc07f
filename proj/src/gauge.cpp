#include "fixlab/gauge.hpp"

#include <cmath>

#include "fixlab/errors.hpp"

namespace fixlab {

double Gauge::eval(double a) const {
  if (!(a > 0)) throw DomainError("gauge argument must be positive");
  switch (kind) {
    case GaugeKind::LnPlusId:
      return std::log(a) + a;
    case GaugeKind::Ln:
      return std::log(a);
    case GaugeKind::NegInvSqrt:
      return -1.0 / std::sqrt(a);
  }
  throw DomainError("unknown gauge kind");
}

void Gauge::validate() const {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw InvalidParameter("gauge lambda must lie in (0,1)");
  if (kind == GaugeKind::NegInvSqrt && !(lambda > 0.5))
    throw InvalidParameter("neg_inv_sqrt requires lambda > 1/2");
}

GaugeKind gauge_kind_from_string(const std::string& s) {
  if (s == "ln_plus_id") return GaugeKind::LnPlusId;
  if (s == "ln") return GaugeKind::Ln;
  if (s == "neg_inv_sqrt") return GaugeKind::NegInvSqrt;
  throw InvalidInstance("unknown gauge kind: \"" + s + "\"");
}

std::string gauge_kind_to_string(GaugeKind k) {
  switch (k) {
    case GaugeKind::LnPlusId: return "ln_plus_id";
    case GaugeKind::Ln: return "ln";
    case GaugeKind::NegInvSqrt: return "neg_inv_sqrt";
  }
  return "?";
}

GaugeAxiomReport check_axioms(const std::function<double(double)>& f,
                              double lambda, int grid_size) {
  if (grid_size < 8) throw InvalidParameter("grid_size must be at least 8");
  GaugeAxiomReport report;

  // F1: strict monotonicity over a logarithmic grid on [1e-9, 1e3]
  {
    const double lo = std::log(1e-9), hi = std::log(1e3);
    bool increasing = true;
    double prev = 0;
    for (int k = 0; k < grid_size; ++k) {
      double a = std::exp(lo + (hi - lo) * k / (grid_size - 1));
      double v = f(a);
      report.f1_samples.emplace_back(a, v);
      if (k > 0 && !(v > prev)) increasing = false;
      prev = v;
    }
    report.f1_ok = increasing;
  }

  // F2: F(1/n) must cross -20 along a geometric sweep of n up to 1e9.
  // 1e6 is too small a cap to separate ln-type gauges from bounded ones
  // (F(1e-6) is only about -13.8 for F = ln).
  {
    bool crossed = false;
    for (double n = 1; n <= 1e9; n *= 2) {
      double v = f(1.0 / n);
      report.f2_samples.emplace_back(1.0 / n, v);
      if (v < -20.0) { crossed = true; break; }
    }
    if (!crossed) {
      double v = f(1e-9);
      report.f2_samples.emplace_back(1e-9, v);
      crossed = v < -20.0;
    }
    report.f2_ok = crossed;
  }

  // F3: a^lambda |F(a)| must flatten below 1e-6 as a -> 0+. The sweep goes
  // far below the F1 grid because sqrt-rate gauges only get there around
  // a ~ 1e-30.
  {
    std::vector<double> vals;
    for (int k = 1; k <= 60; ++k) {
      double a = std::pow(10.0, -k);
      double v = std::pow(a, lambda) * std::fabs(f(a));
      vals.push_back(v);
      report.f3_samples.emplace_back(a, v);
    }
    double tail = vals.back();
    double mid = vals[vals.size() * 3 / 4];
    report.f3_ok = tail < 1e-6 && tail <= mid;
  }

  return report;
}

GaugeAxiomReport check_axioms(const Gauge& g, int grid_size) {
  g.validate();
  return check_axioms([&g](double a) { return g.eval(a); }, g.lambda, grid_size);
}

}  // namespace fixlab
