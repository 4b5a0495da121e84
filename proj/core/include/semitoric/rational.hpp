#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "semitoric/error.hpp"

namespace semitoric {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Normalizing constructor: sign moved to the numerator, always reduced.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) fail(ErrorCode::InvalidArgument, "rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rational(num, den);
}

inline BigInt num(const Rational& r) { return numerator(r); }
inline BigInt den(const Rational& r) { return denominator(r); }

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rational& r);

// Accepts "p" and "p/q" with optional leading '-'.
std::optional<Rational> rat_from_string(const std::string& s);

inline double rat_to_double(const Rational& r) { return r.template convert_to<double>(); }

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt rat_floor(const Rational& r);

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Chebyshev (L-infinity) helpers used across the geometry layer.
inline Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }

} // namespace semitoric
