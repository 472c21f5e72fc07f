#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace fixlab {

// Exact rational scalar. Distances, order data and functional coefficients
// stay exact; only gauge evaluation goes through floating point.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Canonical "p/q" (or plain "p") rendering used by the instance JSON format.
inline std::string to_string(const Rational& r) { return r.str(); }

Rational parse_rational(const std::string& text);

}  // namespace fixlab
