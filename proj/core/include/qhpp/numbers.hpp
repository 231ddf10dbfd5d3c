#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace qhpp {

/// Arbitrary precision integer used for every continued fraction quantity.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& r);

/// Always "num/den", even for integers ("2/1").
std::string to_fraction_string(const Rational& r);

std::string to_string(const Integer& n);

/// Decimal approximation for display only; never used in computations.
std::string to_decimal_string(const Rational& r, int digits = 6);

Integer gcd(const Integer& a, const Integer& b);

/// Inverse of a modulo m in [1, m), or 0 when a is not invertible.
Integer mod_inverse(const Integer& a, const Integer& m);

/// Least non-negative residue.
Integer mod(const Integer& a, const Integer& m);

/// Throws std::overflow_error when n does not fit.
std::int64_t to_int64(const Integer& n);

}  // namespace qhpp
