#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "exlab/encoding.hpp"
#include "exlab/game.hpp"
#include "exlab/linalg.hpp"
#include "exlab/rng.hpp"
#include "exlab/subset_index.hpp"

namespace exlab {

// theta_m = 2 atan(2^{1/m} - 1); the qubit tilt that makes the exclusion
// measurement conclusive.
double theta(int m);

// Product state encoding x with one qubit per bit at angle theta_m.
AmplitudeVector pjo_state(const BitString& x, int m);

// Exclusion effect vector for answer z: amplitude 2^{-m/2} at 0 and
// -(-1)^{z.s} 2^{-m/2} elsewhere. {zeta(z)} is an orthonormal basis.
AmplitudeVector zeta(const BitString& z);

// p_z = <zeta(z)| Tr_{\y}(|state><state|) |zeta(z)> for every m-bit z.
// Walsh-Hadamard fast path; equals the partial_trace + born_probability
// route up to round-off.
ProbabilityDistribution exclusion_measure(const AmplitudeVector& state,
                                          const std::vector<int>& y);

// Same, reusing a precomputed index split (hot enumeration loops).
ProbabilityDistribution exclusion_measure(const AmplitudeVector& state,
                                          const detail::SubsetSplit& split,
                                          int m);

inline ProbabilityDistribution pjo_measure(const AmplitudeVector& state,
                                           const std::vector<int>& y) {
  return exclusion_measure(state, y);
}

// PJO state with amplitudes of Hamming weight > k removed, renormalized.
AmplitudeVector compressed_pjo_state(const BitString& x, int m, int k);

// Error probabilities of the weight-compressed strategy for every cutoff
// k = 0..n at once, computed directly from the state vector: entry k is
// <zeta(M_y(x))| Tr_{\y} rho_k |zeta(M_y(x))> for the k-compressed state.
std::vector<double> compressed_error_profile(const BitString& x,
                                             const std::vector<int>& y, int m);

// Bob's zero-error decoding of a quantized message: picks the smallest z
// whose decoded Born probability reaches 2^-m. Throws if no z qualifies
// (accuracy contract violation).
BitString classical_sim_decode(const ClassicalEncoding& enc,
                               const std::vector<int>& y, int m);

// One-bit majority strategy.
int majority_encode(const BitString& x);  // ties count as majority-zeros
BitString majority_decode(int bit, int m);

// Decode, then sample the exclusion measurement `reps` times and return the
// plurality outcome (ties break to the smallest candidate).
BitString resample_amplify(const ClassicalEncoding& enc,
                           const std::vector<int>& y, int m, long reps,
                           Rng& rng);

BitString random_guess(int m, Rng& rng);

// --- one-way strategy abstraction ---------------------------------------

struct Message {
  std::variant<std::monostate, AmplitudeVector, ClassicalEncoding, BitString>
      payload;
  std::size_t cost = 0;  // qubits for quantum payloads, bits otherwise
  bool quantum = false;
};

struct ProtocolRun {
  InputPair input;
  std::size_t cost = 0;
  BitString output;
  bool won = false;
};

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual Message encode(const BitString& x) const = 0;
  virtual BitString decode(const Message& msg, const std::vector<int>& y,
                           Rng& rng) const = 0;
  virtual std::size_t cost(int n) const = 0;

  // Exact per-pair error probability; nullopt when only sampling makes
  // sense (plurality-vote strategies).
  virtual std::optional<double> error_probability(
      const BitString& x, const std::vector<int>& y) const = 0;

  ProtocolRun run(const InputPair& input, Rng& rng) const;
};

struct StrategyParams {
  std::optional<long> k;    // compression cutoff
  std::optional<long> r;    // fraction bits per component
  std::optional<long> t;    // resample repetitions
  Rational gamma = 0;       // tolerated error (resample accuracy)
};

// Names: pjo, compressed_pjo, classical_sim, majority, random_guess,
// resample.
std::unique_ptr<Strategy> make_strategy(const std::string& name,
                                        const GameInstance& game,
                                        const StrategyParams& params = {});

}  // namespace exlab
