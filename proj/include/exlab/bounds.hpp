#pragma once

#include <optional>
#include <string>
#include <utility>

#include "exlab/rational.hpp"

namespace exlab::bounds {

struct BoundReport {
  std::string name;
  double value = 0.0;
  std::optional<Rational> exact;
  std::string inputs;
};

// Squared norm of the PJO state projected onto Hamming weight <= k:
// sum_{i<=k} C(n,i) cos^{2(n-i)} sin^{2i} at theta_m/2. Monotone in k, 1 at
// k = n.
Real50 a_k(int n, int m, int k);

// sqrt(1 - A_k); upper-bounds the compressed strategy's error.
double compression_error_bound(int n, int m, int k);

// Exact error probability of the k-compressed strategy (independent of the
// inputs). Closed form over weight classes; algebraically zero at k = n.
double compression_error_exact(int n, int m, int k);

struct TailBound {
  double value;       // (n+1) (ne / m^2 k)^k; may over/underflow
  double log2_value;  // always finite
  bool vacuous;       // bound >= 1, no information
};
TailBound analytic_tail_bound(int n, int m, int k);

struct CompressedQubits {
  double log2_count;  // log2 sum_{i<=k} C(n,i), exact integer sum
  int qubits;         // ceiling
};
CompressedQubits compressed_qubits(int n, int k);

// sum_{i=m}^{floor(n/2)} C(n,i) C(i,m) / (2^{n-1} C(n,m)); 0 for m > n/2.
// Exact for odd n; for even n the tie strings are double-counted relative
// to a full enumeration (see majority_error_enumerated).
Rational majority_error_exact(int n, int m);

// Erring fraction of input pairs under the one-bit majority strategy,
// counted pair by pair. n <= 14.
Rational majority_error_enumerated(int n, int m);

// n - log2 sum_{i=0}^{m-1} C(n,i).
double classical_ic_lower_bound(int n, int m);

// 1 / sum_{i=0}^{m} C(n,i): error fraction of the weight >= n-m rectangle
// with the all-zeros answer.
Rational rectangle_construction_error(int n, int m);

// The same fraction by enumerating S x Y. n <= 12.
Rational rectangle_error_enumerated(int n, int m);

double binary_entropy(double p);

// 2 n h(sin^2(theta_m / 2)): twice the message ensemble's entropy.
double pjo_info_cost_bound(int n, int m);

// (10 sqrt(l) eps, 20 sqrt(l) eps); requires eps < 1/(6 sqrt(2l)).
std::pair<double, double> perturbation_bounds(std::size_t l, double eps);

// ceil(ln(1/tau) / (2 gap^2)): repetitions for a plurality vote to separate
// two outcome probabilities differing by 2*gap except with probability
// ~2*tau.
long hoeffding_repetitions(double gap, double tau);

// 2^{t+1} (r+1) for eps = 2^-r.
std::size_t classical_message_bits(int t_qubits, double epsilon);

}  // namespace exlab::bounds
