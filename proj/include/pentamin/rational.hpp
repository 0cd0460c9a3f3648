// Exact arbitrary-precision integers and rationals used throughout.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace pent {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p/q", integer, or decimal strings ("-3", "2.5", "1e-3") exactly.
// Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q" (q > 0).
std::string format_rational(const Rat& r);

// Exact conversion of a finite double (mantissa * 2^e is representable).
Rat rational_from_double(double v);

// Sign of a rational: -1, 0, or +1.
int sign_of(const Rat& r);

}  // namespace pent
