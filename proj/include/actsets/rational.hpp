#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace actsets {

/// Exact rational scalar used by all polyhedral computations.
using Rational = boost::multiprecision::mpq_rational;

/// Parses "7", "-5", "1/3", "-2/7" or exact decimal strings like "1.25".
/// Throws ParseError on anything else (including non-canonical zero
/// denominators).
Rational parse_rational(const std::string& text);

/// "p/q" with q > 1, plain "p" for integers.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

}  // namespace actsets
