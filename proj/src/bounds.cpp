#include "exlab/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "exlab/bits.hpp"
#include "exlab/game.hpp"
#include "exlab/protocols.hpp"

namespace exlab::bounds {

namespace {

struct Angle50 {
  Real50 tau;  // tan(theta_m / 2) = 2^{1/m} - 1
  Real50 c2;   // cos^2(theta_m / 2)
  Real50 s2;   // sin^2
};

Angle50 angle(int m) {
  if (m < 1) throw std::invalid_argument("need m >= 1");
  const Real50 tau = pow(Real50(2), Real50(1) / m) - 1;
  const Real50 c2 = 1 / (1 + tau * tau);
  return {tau, c2, 1 - c2};
}

std::vector<std::uint64_t> subset_masks(int n, int m) {
  std::vector<std::uint64_t> masks;
  auto y = first_subset(m);
  do {
    std::uint64_t mask = 0;
    for (int q : y) mask |= std::uint64_t{1} << (n - q);
    masks.push_back(mask);
  } while (next_subset(y, n));
  return masks;
}

}  // namespace

Real50 a_k(int n, int m, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  const Angle50 ang = angle(m);
  Real50 sum = 0;
  for (int i = 0; i <= k; ++i)
    sum += Real50(binomial(n, i)) * pow(ang.c2, n - i) * pow(ang.s2, i);
  return sum;
}

double compression_error_bound(int n, int m, int k) {
  const Real50 ak = a_k(n, m, k);
  return to_double(sqrt(ak >= 1 ? Real50(0) : 1 - ak));
}

double compression_error_exact(int n, int m, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  const Angle50 ang = angle(m);
  const Real50 cm2 = pow(ang.c2, m);  // cos^{2m}
  const Real50 scale = cm2 / pow(Real50(2), m);

  // g_j^2 where g_j is the overlap of zeta with the weight <= j part of the
  // m measured qubits: (c^m/sqrt(2^m)) (2 - sum_{i<=j} C(m,i) tau^i). The
  // binomial theorem gives (1 + tau)^m = 2, so g_j vanishes for j >= m.
  std::vector<Real50> g2(static_cast<std::size_t>(m), 0);
  Real50 partial = 0, tpow = 1;
  for (int j = 0; j < m; ++j) {
    partial += Real50(binomial(m, j)) * tpow;
    tpow *= ang.tau;
    const Real50 gj = 2 - partial;
    g2[static_cast<std::size_t>(j)] = scale * gj * gj;
  }

  Real50 numer = 0;
  for (int j = std::max(0, k - m + 1); j <= std::min(n - m, k); ++j)
    numer += Real50(binomial(n - m, j)) * pow(ang.c2, n - m - j) *
             pow(ang.s2, j) * g2[static_cast<std::size_t>(k - j)];
  return to_double(numer / a_k(n, m, k));
}

TailBound analytic_tail_bound(int n, int m, int k) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  if (m < 2) throw std::invalid_argument("need m >= 2");
  const double ratio = static_cast<double>(n) * std::exp(1.0) /
                       (static_cast<double>(m) * m * k);
  const double log2v =
      std::log2(static_cast<double>(n) + 1.0) + k * std::log2(ratio);
  return {std::exp2(log2v), log2v, log2v >= 0.0};
}

CompressedQubits compressed_qubits(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  const double lg = log2_big(binomial_sum(n, k));
  return {lg, static_cast<int>(std::ceil(lg - 1e-12))};
}

Rational majority_error_exact(int n, int m) {
  if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
  BigInt numer = 0;
  for (int i = m; i <= n / 2; ++i) numer += binomial(n, i) * binomial(i, m);
  return Rational(numer, (BigInt(1) << (n - 1)) * binomial(n, m));
}

Rational majority_error_enumerated(int n, int m) {
  if (n > 14) throw std::invalid_argument("majority enumeration capped at n = 14");
  const auto masks = subset_masks(n, m);
  std::uint64_t errors = 0;
  for (std::uint64_t xv = 0; xv < (std::uint64_t{1} << n); ++xv) {
    const BitString x(xv, n);
    if (majority_encode(x) == 0) {
      // Bob answers all-ones; he errs on the y fully inside the ones of x.
      for (std::uint64_t mask : masks)
        if ((xv & mask) == mask) ++errors;
    } else {
      for (std::uint64_t mask : masks)
        if ((xv & mask) == 0) ++errors;
    }
  }
  return Rational(BigInt(errors),
                  (BigInt(1) << n) * BigInt(masks.size()));
}

double classical_ic_lower_bound(int n, int m) {
  if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
  return n - log2_big(binomial_sum(n, m - 1));
}

Rational rectangle_construction_error(int n, int m) {
  if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
  return Rational(1, binomial_sum(n, m));
}

Rational rectangle_error_enumerated(int n, int m) {
  if (n > 12) throw std::invalid_argument("rectangle enumeration capped at n = 12");
  const auto masks = subset_masks(n, m);
  std::uint64_t errors = 0, members = 0;
  for (std::uint64_t xv = 0; xv < (std::uint64_t{1} << n); ++xv) {
    if (std::popcount(xv) < n - m) continue;  // S: weight >= n - m
    ++members;
    for (std::uint64_t mask : masks)
      if ((xv & mask) == 0) ++errors;  // all-zeros answer is the restriction
  }
  return Rational(BigInt(errors), BigInt(members) * BigInt(masks.size()));
}

double binary_entropy(double p) {
  if (p < 0.0 || p > 1.0) throw std::domain_error("binary_entropy: p in [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  constexpr double ln2 = 0.6931471805599453094172321;
  return -p * std::log2(p) - (1.0 - p) * std::log1p(-p) / ln2;
}

double pjo_info_cost_bound(int n, int m) {
  if (m < 1) throw std::invalid_argument("need m >= 1");
  const double tau = std::exp2(1.0 / m) - 1.0;
  const double s2 = tau * tau / (1.0 + tau * tau);
  return 2.0 * n * binary_entropy(s2);
}

std::pair<double, double> perturbation_bounds(std::size_t l, double eps) {
  if (l == 0) throw std::invalid_argument("need l >= 1");
  const double limit = 1.0 / (6.0 * std::sqrt(2.0 * static_cast<double>(l)));
  if (!(eps > 0.0) || eps >= limit)
    throw std::domain_error("perturbation_bounds: need 0 < eps < 1/(6 sqrt(2l))");
  const double root = std::sqrt(static_cast<double>(l));
  return {10.0 * root * eps, 20.0 * root * eps};
}

long hoeffding_repetitions(double gap, double tau) {
  if (!(gap > 0.0) || gap > 1.0) throw std::invalid_argument("gap in (0,1]");
  if (!(tau > 0.0) || tau >= 1.0) throw std::invalid_argument("tau in (0,1)");
  return static_cast<long>(std::ceil(std::log(1.0 / tau) / (2.0 * gap * gap)));
}

std::size_t classical_message_bits(int t_qubits, double epsilon) {
  const auto r = dyadic_exponent(epsilon);
  if (!r) throw std::invalid_argument("epsilon must be 2^-r with r >= 1");
  return (std::size_t{2} << t_qubits) * static_cast<std::size_t>(*r + 1);
}

}  // namespace exlab::bounds
