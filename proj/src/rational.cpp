#include "exlab/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace exlab {

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n < 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;  // exact: C(n-k+i, i) is integral
  }
  return result;
}

BigInt binomial_sum(long n, long k) {
  if (k > n) k = n;
  BigInt sum = 0, term = 1;  // term = C(n, i)
  for (long i = 0; i <= k; ++i) {
    sum += term;
    term *= (n - i);
    term /= (i + 1);
  }
  return sum;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }
double to_double(const Real50& x) { return x.convert_to<double>(); }

double log2_big(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log2_big: nonpositive");
  const Real50 x(v);
  return to_double(log(x) / log(Real50(2)));
}

std::string rational_str(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt num(s.substr(0, slash));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational: " + s);
  }
}

int dyadic_floor_exponent(const Rational& v) {
  if (v <= 0 || v > 1) throw std::domain_error("dyadic_floor_exponent: v not in (0,1]");
  // Smallest r with num * 2^r >= den, i.e. 2^{-r} <= v.
  const BigInt num = numerator(v), den = denominator(v);
  int r = 0;
  BigInt lhs = num;
  while (lhs < den) {
    lhs <<= 1;
    ++r;
  }
  return r;
}

std::optional<int> dyadic_exponent(double eps) {
  if (!(eps > 0.0) || eps > 0.5) return std::nullopt;
  int exp = 0;
  const double mant = std::frexp(eps, &exp);  // eps = mant * 2^exp, mant in [0.5,1)
  if (mant != 0.5) return std::nullopt;
  return 1 - exp;
}

}  // namespace exlab
