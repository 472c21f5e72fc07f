#pragma once

#include <string>

#include "fixlab/rational.hpp"
#include "fixlab/space.hpp"

namespace fixlab {

enum class FunctionalVariant {
  MMax,       // max{d(x,y), d(x,ux), d(y,uy), (d(x,uy)+d(y,ux))/2}
  MLinear,    // a d(x,y) + b d(x,ux) + g d(y,uy) + d1 d(x,uy) + d2 d(y,ux)
  LinearABC,  // a d(x,y) + b d(x,ux) + g d(y,uy)
  Kannan,     // h (d(x,ux) + d(y,uy))
  Banach,     // d(x,y)
};

struct Functional {
  FunctionalVariant variant = FunctionalVariant::MMax;
  Rational alpha = 0, beta = 0, gamma = 0, delta1 = 0, delta2 = 0;
  Rational h = 0;

  // Coefficient constraints per variant; throws InvalidInstance.
  void validate() const;
};

FunctionalVariant functional_variant_from_string(const std::string& s);
std::string functional_variant_to_string(FunctionalVariant v);

// Dominating expression the contraction inequality is tested against.
// Exact rational arithmetic throughout.
Rational m_value(const Functional& f, const OrderedMetricSpace& space,
                 PointIndex x, PointIndex y, PointIndex ux, PointIndex uy);

}  // namespace fixlab
