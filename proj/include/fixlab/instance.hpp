#pragma once

#include <string>

#include "fixlab/contraction.hpp"
#include "fixlab/family.hpp"
#include "fixlab/functional.hpp"
#include "fixlab/gauge.hpp"
#include "fixlab/space.hpp"

namespace fixlab {

// Everything a run needs: the hypothesis data plus modulus and quantifier
// mode. Serialized as a single JSON document with rationals as "p/q"
// strings so corpora stay diffable and exact.
struct Instance {
  OrderedMetricSpace space;
  MapFamily family;
  Gauge gauge;
  Functional functional;
  Rational tau = 1;
  Mode mode = Mode::Existential;

  // All component invariants plus cross-references. Throws InvalidInstance.
  void validate() const;
};

Instance instance_from_json(const std::string& text);
std::string instance_to_json(const Instance& inst);

// Throws InvalidInstance with a location on parse or invariant failure.
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

}  // namespace fixlab
