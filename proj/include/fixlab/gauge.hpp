#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fixlab {

enum class GaugeKind {
  LnPlusId,    // F(a) = ln a + a
  Ln,          // F(a) = ln a
  NegInvSqrt,  // F(a) = -1/sqrt(a), requires lambda > 1/2
};

// A gauge from the Wardowski class together with the exponent used by the
// tail-flattening condition and the rate bound. Immutable value object.
struct Gauge {
  GaugeKind kind = GaugeKind::LnPlusId;
  double lambda = 0.5;  // in (0,1); NegInvSqrt additionally needs > 1/2

  // Throws DomainError for a <= 0.
  double eval(double a) const;

  // Throws InvalidParameter when lambda is outside the admissible range.
  void validate() const;
};

GaugeKind gauge_kind_from_string(const std::string& s);
std::string gauge_kind_to_string(GaugeKind k);

struct GaugeAxiomReport {
  bool f1_ok = false;  // strictly increasing on the sample grid
  bool f2_ok = false;  // F(1/n) crosses the -20 threshold
  bool f3_ok = false;  // a^lambda |F(a)| flattens below 1e-6
  bool ok() const { return f1_ok && f2_ok && f3_ok; }
  // witnessing samples: (a, F(a)) for F1/F2, (a, a^lambda |F(a)|) for F3
  std::vector<std::pair<double, double>> f1_samples;
  std::vector<std::pair<double, double>> f2_samples;
  std::vector<std::pair<double, double>> f3_samples;
};

// Desk-scale falsifiers for the three gauge axioms, applied to an arbitrary
// evaluator so tests can probe kinds that are not shipped.
GaugeAxiomReport check_axioms(const std::function<double(double)>& f,
                              double lambda, int grid_size);
GaugeAxiomReport check_axioms(const Gauge& g, int grid_size);

}  // namespace fixlab
