#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace exlab {

// Exact arithmetic for the combinatorial formulas: thresholds like
// (n+1)^{-m} underflow doubles long before the interesting regimes.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;  // kept in lowest terms
using Real50 = boost::multiprecision::cpp_bin_float_50;

BigInt binomial(long n, long k);

// sum_{i=0}^{k} C(n, i)
BigInt binomial_sum(long n, long k);

double to_double(const Rational& r);
double to_double(const Real50& x);

// log2 of a positive big integer, accurate to ~1e-14 relative.
double log2_big(const BigInt& v);

// Canonical "p/q" form, e.g. "1/8", "0/1".
std::string rational_str(const Rational& r);

// Accepts "p/q" or a bare integer "p".
Rational parse_rational(const std::string& s);

// Largest r with 2^{-r} <= v, for v in (0, 1]. Exact integer arithmetic.
int dyadic_floor_exponent(const Rational& v);

// r such that eps == 2^{-r} exactly, if any (r >= 1).
std::optional<int> dyadic_exponent(double eps);

}  // namespace exlab
