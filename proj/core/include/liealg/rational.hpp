#ifndef LIEALG_RATIONAL_HPP
#define LIEALG_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace liealg {

// GMP-backed exact arithmetic. mpq keeps every value canonical:
// gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q" or "p". Accepts an optional leading sign on p; q must be nonzero.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise. Never floats.
std::string format_rational(const Rational& value);

} // namespace liealg

#endif
