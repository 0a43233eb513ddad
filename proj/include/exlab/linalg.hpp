#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "exlab/bits.hpp"

namespace exlab {

using cplx = std::complex<double>;

inline constexpr double kZeroTol = 1e-10;

// State vector over the computational basis of `num_qubits` qubits.
// Qubit 1 is the most significant bit of the basis index.
class AmplitudeVector {
 public:
  explicit AmplitudeVector(int num_qubits);
  AmplitudeVector(int num_qubits, std::vector<cplx> amplitudes);

  static AmplitudeVector basis_state(int num_qubits, std::uint64_t index);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }

  cplx& operator[](std::size_t i) { return amps_[i]; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }
  cplx* data() { return amps_.data(); }
  const cplx* data() const { return amps_.data(); }
  const std::vector<cplx>& amplitudes() const { return amps_; }

  double norm_sq() const;
  bool is_normalized(double tol = kZeroTol) const;

 private:
  int num_qubits_;
  std::vector<cplx> amps_;
};

class DensityMatrix {
 public:
  DensityMatrix(int num_qubits, Eigen::MatrixXcd entries);

  static DensityMatrix pure(const AmplitudeVector& psi);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(mat_.rows()); }
  const Eigen::MatrixXcd& entries() const { return mat_; }
  Eigen::MatrixXcd& entries() { return mat_; }

  double trace_real() const { return mat_.trace().real(); }
  bool is_hermitian(double tol = kZeroTol) const;

 private:
  int num_qubits_;
  Eigen::MatrixXcd mat_;
};

// Distribution over m-bit outcome strings, indexed by outcome value.
struct ProbabilityDistribution {
  int length = 0;
  std::vector<double> probs;
  bool normalized = true;  // false only for intentionally unnormalized data

  BitString outcome(std::size_t i) const {
    return BitString(static_cast<std::uint64_t>(i), length);
  }
  double total() const;
  void validate(double tol = 1e-9) const;
};

AmplitudeVector tensor_product(const AmplitudeVector& a,
                               const AmplitudeVector& b);

// Conjugate-linear in the first argument.
cplx inner_product(const AmplitudeVector& a, const AmplitudeVector& b);

// sqrt(1 - |<a|b>|^2); both states must be normalized.
double trace_distance_pure(const AmplitudeVector& a, const AmplitudeVector& b);

// Reduced state on the (1-based, ascending) qubits in `keep`.
DensityMatrix partial_trace(const AmplitudeVector& state,
                            const std::vector<int>& keep);

// In bits; eigenvalues below 1e-12 are treated as exact zeros.
double von_neumann_entropy(const DensityMatrix& rho);

// <effect| rho |effect>, clipped to [0, 1].
double born_probability(const DensityMatrix& rho,
                        const AmplitudeVector& effect);

}  // namespace exlab
