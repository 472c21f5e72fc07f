#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "fixlab/family.hpp"
#include "fixlab/functional.hpp"
#include "fixlab/gauge.hpp"
#include "fixlab/space.hpp"

namespace fixlab {

enum class Mode {
  // The hypothesis as printed: any witness works, a pair outside the strict
  // order satisfies the implication vacuously.
  Existential,
  // The selection the proofs run on: a witness must either coincide with
  // u_x (zero distance, the induction terminates there) or be a strict-order
  // successor satisfying the inequality.
  Strong,
};

Mode mode_from_string(const std::string& s);
std::string mode_to_string(Mode m);

// Default inequality tolerance; FIXLAB_EPS overrides it.
double default_eps();

constexpr double kInfSlack = std::numeric_limits<double>::infinity();

// One constraint tuple (map index i, (x,y) in the reflexive order relation,
// u_x in T_i(x)) together with the chosen witness and its slack.
// slack = F(M) - F(d(ux,uy)) for a bound witness, +inf for a vacuous one.
struct WitnessEntry {
  int i = 0;
  PointIndex x = 0, y = 0, ux = 0;
  std::optional<PointIndex> uy;  // empty when the tuple is vacuous with no witness
  double slack = 0;
  double dist = 0;     // d(ux,uy) of the chosen witness, 0 when vacuous
  double m = 0;        // M(x,y;ux,uy) of the chosen witness, 0 when vacuous
};

struct Certificate {
  bool passes = false;
  double tau = 0;
  double tau_star = 0;  // +inf when every tuple has an infinite-slack witness
  Mode mode = Mode::Existential;
  std::vector<WitnessEntry> witness_table;  // one best witness per tuple
  std::vector<WitnessEntry> violations;
};

// Inequality form used to decide each tuple. Log is the statement itself,
// Exp is the d e^{d-M} <= e^{-tau} M rendering (LnPlusId only).
enum class CheckForm { Log, Exp };

// Best witness for one constraint tuple under the mode's admissibility
// rules; ties broken by smallest point label. Throws InvalidParameter when
// (x,y) is not an order pair or ux is not a value of T_i(x).
WitnessEntry slack(const OrderedMetricSpace& space, const MapFamily& family,
                   const Gauge& gauge, const Functional& functional, int i,
                   PointIndex x, PointIndex y, PointIndex ux, Mode mode);

// Decides the contraction hypothesis for the whole family at modulus tau.
Certificate check_family(const OrderedMetricSpace& space,
                         const MapFamily& family, const Gauge& gauge,
                         const Functional& functional, double tau, Mode mode,
                         double eps = default_eps(),
                         CheckForm form = CheckForm::Log);

// Maximal admissible modulus: min over tuples of the best witness slack.
double max_tau(const OrderedMetricSpace& space, const MapFamily& family,
               const Gauge& gauge, const Functional& functional, Mode mode);

// The exponentiated inequality d e^{d-M} <= e^{-tau} M, the form the worked
// case analysis is displayed in. Valid only against the LnPlusId gauge.
bool exp_form_holds(double d, double m, double tau, double eps = default_eps());

}  // namespace fixlab
