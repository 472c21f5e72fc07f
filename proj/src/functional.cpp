#include "fixlab/functional.hpp"

#include <algorithm>

#include "fixlab/errors.hpp"

namespace fixlab {

void Functional::validate() const {
  auto nonneg = [](const Rational& r, const char* name) {
    if (r < 0) throw InvalidInstance(std::string("coefficient ") + name +
                                     " must be nonnegative");
  };
  switch (variant) {
    case FunctionalVariant::MMax:
    case FunctionalVariant::Banach:
      return;
    case FunctionalVariant::MLinear:
      nonneg(alpha, "alpha"); nonneg(beta, "beta"); nonneg(gamma, "gamma");
      nonneg(delta1, "delta1"); nonneg(delta2, "delta2");
      if (delta1 > delta2)
        throw InvalidInstance("m_linear requires delta1 <= delta2");
      if (alpha + beta + gamma + delta1 + delta2 > 1)
        throw InvalidInstance("m_linear coefficients must sum to at most 1");
      return;
    case FunctionalVariant::LinearABC:
      nonneg(alpha, "alpha"); nonneg(beta, "beta"); nonneg(gamma, "gamma");
      if (alpha + beta + gamma > 1)
        throw InvalidInstance("linear_abc coefficients must sum to at most 1");
      return;
    case FunctionalVariant::Kannan:
      if (h < 0 || h > Rational(1, 2))
        throw InvalidInstance("kannan requires h in [0, 1/2]");
      return;
  }
  throw InvalidInstance("unknown functional variant");
}

FunctionalVariant functional_variant_from_string(const std::string& s) {
  if (s == "m_max") return FunctionalVariant::MMax;
  if (s == "m_linear") return FunctionalVariant::MLinear;
  if (s == "linear_abc") return FunctionalVariant::LinearABC;
  if (s == "kannan") return FunctionalVariant::Kannan;
  if (s == "banach") return FunctionalVariant::Banach;
  throw InvalidInstance("unknown functional variant: \"" + s + "\"");
}

std::string functional_variant_to_string(FunctionalVariant v) {
  switch (v) {
    case FunctionalVariant::MMax: return "m_max";
    case FunctionalVariant::MLinear: return "m_linear";
    case FunctionalVariant::LinearABC: return "linear_abc";
    case FunctionalVariant::Kannan: return "kannan";
    case FunctionalVariant::Banach: return "banach";
  }
  return "?";
}

Rational m_value(const Functional& f, const OrderedMetricSpace& space,
                 PointIndex x, PointIndex y, PointIndex ux, PointIndex uy) {
  const Rational& dxy = space.d(x, y);
  const Rational& dxux = space.d(x, ux);
  const Rational& dyuy = space.d(y, uy);
  const Rational& dxuy = space.d(x, uy);
  const Rational& dyux = space.d(y, ux);
  switch (f.variant) {
    case FunctionalVariant::MMax: {
      Rational half = (dxuy + dyux) / 2;
      return std::max({dxy, dxux, dyuy, half});
    }
    case FunctionalVariant::MLinear:
      return f.alpha * dxy + f.beta * dxux + f.gamma * dyuy +
             f.delta1 * dxuy + f.delta2 * dyux;
    case FunctionalVariant::LinearABC:
      return f.alpha * dxy + f.beta * dxux + f.gamma * dyuy;
    case FunctionalVariant::Kannan:
      return f.h * (dxux + dyuy);
    case FunctionalVariant::Banach:
      return dxy;
  }
  throw InvalidInstance("unknown functional variant");
}

}  // namespace fixlab
