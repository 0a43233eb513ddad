#include "exlab/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "exlab/kernels.hpp"
#include "exlab/subset_index.hpp"

namespace exlab {

namespace {

std::size_t checked_dim(int num_qubits) {
  if (num_qubits < 0 || num_qubits > 30)
    throw std::invalid_argument("qubit count out of range");
  return std::size_t{1} << num_qubits;
}

}  // namespace

AmplitudeVector::AmplitudeVector(int num_qubits)
    : num_qubits_(num_qubits), amps_(checked_dim(num_qubits), cplx{0.0, 0.0}) {}

AmplitudeVector::AmplitudeVector(int num_qubits, std::vector<cplx> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (amps_.size() != checked_dim(num_qubits))
    throw std::invalid_argument("amplitude count must be 2^t");
}

AmplitudeVector AmplitudeVector::basis_state(int num_qubits,
                                             std::uint64_t index) {
  AmplitudeVector v(num_qubits);
  if (index >= v.dim()) throw std::out_of_range("basis index");
  v[index] = 1.0;
  return v;
}

double AmplitudeVector::norm_sq() const {
  return kernels::active().norm_sq(amps_.data(), amps_.size());
}

bool AmplitudeVector::is_normalized(double tol) const {
  return std::abs(norm_sq() - 1.0) <= tol;
}

DensityMatrix::DensityMatrix(int num_qubits, Eigen::MatrixXcd entries)
    : num_qubits_(num_qubits), mat_(std::move(entries)) {
  const auto d = static_cast<Eigen::Index>(checked_dim(num_qubits));
  if (mat_.rows() != d || mat_.cols() != d)
    throw std::invalid_argument("density matrix must be 2^t x 2^t");
}

DensityMatrix DensityMatrix::pure(const AmplitudeVector& psi) {
  const auto d = static_cast<Eigen::Index>(psi.dim());
  Eigen::Map<const Eigen::VectorXcd> v(psi.data(), d);
  return DensityMatrix(psi.num_qubits(), v * v.adjoint());
}

bool DensityMatrix::is_hermitian(double tol) const {
  return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double ProbabilityDistribution::total() const {
  return std::accumulate(probs.begin(), probs.end(), 0.0);
}

void ProbabilityDistribution::validate(double tol) const {
  if (probs.size() != (std::size_t{1} << length))
    throw std::invalid_argument("probability count must be 2^m");
  for (double p : probs)
    if (p < -tol || p > 1.0 + tol)
      throw std::domain_error("probability out of [0,1]");
  if (normalized && std::abs(total() - 1.0) > tol)
    throw std::domain_error("probabilities do not sum to 1");
}

AmplitudeVector tensor_product(const AmplitudeVector& a,
                               const AmplitudeVector& b) {
  AmplitudeVector out(a.num_qubits() + b.num_qubits());
  const std::size_t db = b.dim();
  const auto& k = kernels::active();
  for (std::size_t j = 0; j < a.dim(); ++j)
    k.cscale(out.data() + j * db, b.data(), a[j], db);
  return out;
}

cplx inner_product(const AmplitudeVector& a, const AmplitudeVector& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("inner_product: dimension mismatch");
  return kernels::active().cdotc(a.data(), b.data(), a.dim());
}

double trace_distance_pure(const AmplitudeVector& a,
                           const AmplitudeVector& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("trace_distance_pure: dimension mismatch");
  if (!a.is_normalized() || !b.is_normalized())
    throw std::invalid_argument("trace_distance_pure: unnormalized input");
  const double overlap = std::norm(inner_product(a, b));
  return std::sqrt(std::max(0.0, 1.0 - overlap));
}

DensityMatrix partial_trace(const AmplitudeVector& state,
                            const std::vector<int>& keep) {
  const int n = state.num_qubits();
  const int m = static_cast<int>(keep.size());
  std::vector<bool> kept(static_cast<std::size_t>(n) + 1, false);
  for (int q : keep) {
    if (q < 1 || q > n) throw std::out_of_range("partial_trace: qubit index");
    if (kept[static_cast<std::size_t>(q)])
      throw std::invalid_argument("partial_trace: duplicate index");
    kept[static_cast<std::size_t>(q)] = true;
  }
  for (std::size_t i = 1; i < keep.size(); ++i)
    if (keep[i] <= keep[i - 1])
      throw std::invalid_argument("partial_trace: indices must ascend");

  const auto split = detail::make_subset_split(n, keep);
  const auto& kidx = split.kept;
  const auto& tidx = split.traced;
  const std::size_t dk = kidx.size();
  const std::size_t dt = tidx.size();

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk),
                                                static_cast<Eigen::Index>(dk));
  for (std::size_t t = 0; t < dt; ++t) {
    for (std::size_t a = 0; a < dk; ++a) {
      const cplx va = state[kidx[a] | tidx[t]];
      if (va == cplx{0.0, 0.0}) continue;
      for (std::size_t b = 0; b < dk; ++b)
        rho(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) +=
            va * std::conj(state[kidx[b] | tidx[t]]);
    }
  }
  return DensityMatrix(m, std::move(rho));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  if (!rho.is_hermitian())
    throw std::invalid_argument("von_neumann_entropy: not Hermitian");

  Eigen::VectorXd evals;
  const auto& mat = rho.entries();
  if (mat.imag().cwiseAbs().maxCoeff() == 0.0) {
    // Real symmetric case (all baked-in ensembles land here); much faster.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        mat.real(), Eigen::EigenvaluesOnly);
    evals = es.eigenvalues();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat,
                                                       Eigen::EigenvaluesOnly);
    evals = es.eigenvalues();
  }

  double h = 0.0;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    const double lam = evals[i];
    if (lam < -kZeroTol)
      throw std::domain_error("von_neumann_entropy: negative eigenvalue");
    if (lam > 1e-12) h -= lam * std::log2(lam);
  }
  return h;
}

double born_probability(const DensityMatrix& rho,
                        const AmplitudeVector& effect) {
  if (rho.dim() != effect.dim())
    throw std::invalid_argument("born_probability: dimension mismatch");
  Eigen::Map<const Eigen::VectorXcd> v(effect.data(),
                                       static_cast<Eigen::Index>(effect.dim()));
  const cplx val = (v.adjoint() * rho.entries() * v)(0);
  if (std::abs(val.imag()) > kZeroTol)
    throw std::domain_error("born_probability: expectation not real");
  return std::clamp(val.real(), 0.0, 1.0);
}

}  // namespace exlab
