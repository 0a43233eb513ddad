#include "exlab/protocols.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "exlab/kernels.hpp"
#include "exlab/subset_index.hpp"

namespace exlab {

double theta(int m) {
  if (m < 1) throw std::invalid_argument("theta: need m >= 1");
  return 2.0 * std::atan(std::exp2(1.0 / m) - 1.0);
}

AmplitudeVector pjo_state(const BitString& x, int m) {
  const double half = theta(m) / 2.0;
  const double c = std::cos(half), s = std::sin(half);
  AmplitudeVector state(0, {cplx{1.0, 0.0}});
  for (int i = 1; i <= x.length; ++i) {
    const double sign = x.bit(i) ? -1.0 : 1.0;
    AmplitudeVector qubit(1, {cplx{c, 0.0}, cplx{sign * s, 0.0}});
    state = tensor_product(state, qubit);
  }
  return state;
}

AmplitudeVector zeta(const BitString& z) {
  const int m = z.length;
  if (m < 1) throw std::invalid_argument("zeta: need m >= 1");
  const double amp = std::exp2(-0.5 * m);
  AmplitudeVector v(m);
  v[0] = amp;
  for (std::uint64_t s = 1; s < v.dim(); ++s) {
    const bool odd = std::popcount(z.value & s) & 1;
    v[s] = odd ? amp : -amp;
  }
  return v;
}

ProbabilityDistribution exclusion_measure(const AmplitudeVector& state,
                                          const std::vector<int>& y) {
  const int n = state.num_qubits();
  validate_index_set(y, n);
  if (!state.is_normalized())
    throw std::invalid_argument("exclusion_measure: unnormalized state");
  const int m = static_cast<int>(y.size());
  const auto split = detail::make_subset_split(n, y);
  const std::size_t dm = split.kept.size();
  const auto& k = kernels::active();

  ProbabilityDistribution dist{m, std::vector<double>(dm, 0.0), true};
  std::vector<cplx> block(dm);
  const double scale = std::exp2(-m);
  for (std::uint64_t t : split.traced) {
    for (std::size_t u = 0; u < dm; ++u) block[u] = state[split.kept[u] | t];
    const cplx v0 = block[0];
    k.wht(block.data(), m);
    k.excl_accum(dist.probs.data(), block.data(), 2.0 * v0, scale, dm);
  }
  return dist;
}

AmplitudeVector compressed_pjo_state(const BitString& x, int m, int k) {
  const int n = x.length;
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  AmplitudeVector psi = pjo_state(x, m);
  for (std::size_t r = 0; r < psi.dim(); ++r)
    if (std::popcount(r) > k) psi[r] = 0.0;
  const double norm = std::sqrt(psi.norm_sq());
  if (norm == 0.0) throw std::domain_error("compressed state has zero norm");
  for (std::size_t r = 0; r < psi.dim(); ++r) psi[r] /= norm;
  return psi;
}

std::vector<double> compressed_error_profile(const BitString& x,
                                             const std::vector<int>& y,
                                             int m) {
  const int n = x.length;
  validate_index_set(y, n);
  if (static_cast<int>(y.size()) != m)
    throw std::invalid_argument("profile: |y| != m");

  const AmplitudeVector psi = pjo_state(x, m);
  const AmplitudeVector effect = zeta(restrict_bits(x, y));
  const auto split = detail::make_subset_split(n, y);
  const std::size_t dm = split.kept.size();

  // Kept patterns grouped by Hamming weight.
  std::vector<std::vector<std::uint32_t>> bucket(static_cast<std::size_t>(m) +
                                                 1);
  for (std::uint32_t u = 0; u < dm; ++u)
    bucket[static_cast<std::size_t>(std::popcount(u))].push_back(u);

  std::vector<double> numer(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> tail(static_cast<std::size_t>(n) + 2, 0.0);
  std::vector<double> weight_norm(static_cast<std::size_t>(n) + 1, 0.0);

  for (std::size_t ti = 0; ti < split.traced.size(); ++ti) {
    const std::uint64_t tbits = split.traced[ti];
    const int wt = std::popcount(static_cast<std::uint64_t>(ti));
    cplx acc{0.0, 0.0};
    for (int j = 0; j <= m; ++j) {
      for (std::uint32_t u : bucket[static_cast<std::size_t>(j)]) {
        const cplx a = psi[split.kept[u] | tbits];
        acc += effect[u].real() * a;
        weight_norm[static_cast<std::size_t>(wt + j)] += std::norm(a);
      }
      if (wt + j <= n) numer[static_cast<std::size_t>(wt + j)] += std::norm(acc);
    }
    if (wt + m + 1 <= n) tail[static_cast<std::size_t>(wt + m + 1)] += std::norm(acc);
  }

  std::vector<double> eps(static_cast<std::size_t>(n) + 1);
  double tail_run = 0.0, norm_run = 0.0;
  for (int k = 0; k <= n; ++k) {
    tail_run += tail[static_cast<std::size_t>(k)];
    norm_run += weight_norm[static_cast<std::size_t>(k)];
    eps[static_cast<std::size_t>(k)] =
        (numer[static_cast<std::size_t>(k)] + tail_run) / norm_run;
  }
  return eps;
}

BitString classical_sim_decode(const ClassicalEncoding& enc,
                               const std::vector<int>& y, int m) {
  const AmplitudeVector decoded = decode_and_normalize(enc);
  const ProbabilityDistribution p = exclusion_measure(decoded, y);
  const double threshold = std::exp2(-m);
  for (std::size_t z = 0; z < p.probs.size(); ++z)
    if (p.probs[z] >= threshold) return BitString(z, m);
  throw std::domain_error(
      "classical_sim_decode: no candidate reached 2^-m; encoding accuracy "
      "contract violated");
}

int majority_encode(const BitString& x) {
  return 2 * x.weight() <= x.length ? 0 : 1;
}

BitString majority_decode(int bit, int m) {
  const BitString zeros(0, m);
  return bit ? zeros : zeros.complemented();
}

BitString resample_amplify(const ClassicalEncoding& enc,
                           const std::vector<int>& y, int m, long reps,
                           Rng& rng) {
  if (reps < 1) throw std::invalid_argument("resample_amplify: reps >= 1");
  const AmplitudeVector decoded = decode_and_normalize(enc);
  const ProbabilityDistribution p = exclusion_measure(decoded, y);
  std::vector<long> counts(p.probs.size(), 0);
  for (long i = 0; i < reps; ++i) ++counts[rng.sample(p.probs)];
  std::size_t best = 0;
  for (std::size_t z = 1; z < counts.size(); ++z)
    if (counts[z] > counts[best]) best = z;
  return BitString(best, m);
}

BitString random_guess(int m, Rng& rng) {
  return BitString(rng.bits(m), m);
}

ProtocolRun Strategy::run(const InputPair& input, Rng& rng) const {
  const Message msg = encode(input.x);
  const BitString out = decode(msg, input.y, rng);
  return ProtocolRun{input, msg.cost, out, is_win(input.x, input.y, out)};
}

namespace {

std::size_t compressed_cost(int n, int k) {
  const double lg = log2_big(binomial_sum(n, k));
  return static_cast<std::size_t>(std::ceil(lg - 1e-12));
}

class PjoStrategy final : public Strategy {
 public:
  explicit PjoStrategy(const GameInstance& g) : game_(g) {}
  std::string name() const override { return "pjo"; }
  Message encode(const BitString& x) const override {
    return {pjo_state(x, game_.m), static_cast<std::size_t>(game_.n), true};
  }
  BitString decode(const Message& msg, const std::vector<int>& y,
                   Rng& rng) const override {
    const auto& state = std::get<AmplitudeVector>(msg.payload);
    const auto p = exclusion_measure(state, y);
    return BitString(rng.sample(p.probs), game_.m);
  }
  std::size_t cost(int n) const override {
    return static_cast<std::size_t>(n);
  }
  std::optional<double> error_probability(
      const BitString& x, const std::vector<int>& y) const override {
    const auto p = exclusion_measure(pjo_state(x, game_.m), y);
    return p.probs[restrict_bits(x, y).value];
  }

 private:
  GameInstance game_;
};

class CompressedPjoStrategy final : public Strategy {
 public:
  CompressedPjoStrategy(const GameInstance& g, int k) : game_(g), k_(k) {}
  std::string name() const override { return "compressed_pjo"; }
  Message encode(const BitString& x) const override {
    return {compressed_pjo_state(x, game_.m, k_), cost(game_.n), true};
  }
  BitString decode(const Message& msg, const std::vector<int>& y,
                   Rng& rng) const override {
    const auto& state = std::get<AmplitudeVector>(msg.payload);
    return BitString(rng.sample(exclusion_measure(state, y).probs), game_.m);
  }
  std::size_t cost(int n) const override { return compressed_cost(n, k_); }
  std::optional<double> error_probability(
      const BitString& x, const std::vector<int>& y) const override {
    const auto p = exclusion_measure(compressed_pjo_state(x, game_.m, k_), y);
    return p.probs[restrict_bits(x, y).value];
  }

 private:
  GameInstance game_;
  int k_;
};

class ClassicalSimStrategy final : public Strategy {
 public:
  ClassicalSimStrategy(const GameInstance& g, std::optional<long> r)
      : game_(g),
        r_(r ? static_cast<int>(*r)
             : accuracy_exponent_for_zero_error(g.m, g.n)) {
    if (r_ < 1) throw std::invalid_argument("classical_sim: r >= 1");
  }
  std::string name() const override { return "classical_sim"; }
  Message encode(const BitString& x) const override {
    auto enc = quantize_amplitudes(pjo_state(x, game_.m), std::ldexp(1.0, -r_));
    const std::size_t bits = enc.bit_length();
    return {std::move(enc), bits, false};
  }
  BitString decode(const Message& msg, const std::vector<int>& y,
                   Rng&) const override {
    return classical_sim_decode(std::get<ClassicalEncoding>(msg.payload), y,
                                game_.m);
  }
  std::size_t cost(int n) const override {
    return (std::size_t{2} << n) * static_cast<std::size_t>(r_ + 1);
  }
  std::optional<double> error_probability(
      const BitString& x, const std::vector<int>& y) const override {
    Rng unused(0);
    const ProtocolRun rr = run(InputPair{x, y}, unused);
    return rr.won ? 0.0 : 1.0;
  }
  int fraction_bits() const { return r_; }

 private:
  GameInstance game_;
  int r_;
};

class MajorityStrategy final : public Strategy {
 public:
  explicit MajorityStrategy(const GameInstance& g) : game_(g) {}
  std::string name() const override { return "majority"; }
  Message encode(const BitString& x) const override {
    return {BitString(static_cast<std::uint64_t>(majority_encode(x)), 1), 1,
            false};
  }
  BitString decode(const Message& msg, const std::vector<int>&,
                   Rng&) const override {
    return majority_decode(
        static_cast<int>(std::get<BitString>(msg.payload).value), game_.m);
  }
  std::size_t cost(int) const override { return 1; }
  std::optional<double> error_probability(
      const BitString& x, const std::vector<int>& y) const override {
    const BitString z = majority_decode(majority_encode(x), game_.m);
    return is_win(x, y, z) ? 0.0 : 1.0;
  }

 private:
  GameInstance game_;
};

class RandomGuessStrategy final : public Strategy {
 public:
  explicit RandomGuessStrategy(const GameInstance& g) : game_(g) {}
  std::string name() const override { return "random_guess"; }
  Message encode(const BitString&) const override { return {}; }
  BitString decode(const Message&, const std::vector<int>&,
                   Rng& rng) const override {
    return random_guess(game_.m, rng);
  }
  std::size_t cost(int) const override { return 0; }
  std::optional<double> error_probability(const BitString&,
                                          const std::vector<int>&)
      const override {
    return std::exp2(-game_.m);
  }

 private:
  GameInstance game_;
};

class ResampleStrategy final : public Strategy {
 public:
  ResampleStrategy(const GameInstance& g, std::optional<long> k,
                   std::optional<long> r, long reps)
      : game_(g), k_(k), reps_(reps) {
    if (reps_ < 1) throw std::invalid_argument("resample: t >= 1");
    if (r) {
      r_ = static_cast<int>(*r);
    } else {
      // Accuracy (2^-m - gamma) 2^-s / 20, rounded down to a power of two.
      const Rational slack =
          Rational(1, BigInt(1) << game_.m) - game_.gamma;
      if (slack <= 0)
        throw std::invalid_argument("resample: need gamma < 2^-m");
      const std::size_t s = k_ ? compressed_cost(game_.n, static_cast<int>(*k_))
                               : static_cast<std::size_t>(game_.n);
      r_ = dyadic_floor_exponent(slack / (20 * (BigInt(1) << s)));
    }
  }
  std::string name() const override { return "resample"; }
  Message encode(const BitString& x) const override {
    const AmplitudeVector state =
        k_ ? compressed_pjo_state(x, game_.m, static_cast<int>(*k_))
           : pjo_state(x, game_.m);
    auto enc = quantize_amplitudes(state, std::ldexp(1.0, -r_));
    const std::size_t bits = enc.bit_length();
    return {std::move(enc), bits, false};
  }
  BitString decode(const Message& msg, const std::vector<int>& y,
                   Rng& rng) const override {
    return resample_amplify(std::get<ClassicalEncoding>(msg.payload), y,
                            game_.m, reps_, rng);
  }
  std::size_t cost(int n) const override {
    return (std::size_t{2} << n) * static_cast<std::size_t>(r_ + 1);
  }
  std::optional<double> error_probability(const BitString&,
                                          const std::vector<int>&)
      const override {
    return std::nullopt;  // plurality of t samples; use sampled mode
  }
  int fraction_bits() const { return r_; }

 private:
  GameInstance game_;
  std::optional<long> k_;
  long reps_;
  int r_ = 1;
};

}  // namespace

std::unique_ptr<Strategy> make_strategy(const std::string& name,
                                        const GameInstance& game,
                                        const StrategyParams& params) {
  GameInstance g = game;
  if (params.gamma != 0) g.gamma = params.gamma;
  if (name == "pjo") return std::make_unique<PjoStrategy>(g);
  if (name == "compressed_pjo") {
    if (!params.k) throw std::invalid_argument("compressed_pjo needs k");
    return std::make_unique<CompressedPjoStrategy>(g,
                                                   static_cast<int>(*params.k));
  }
  if (name == "classical_sim")
    return std::make_unique<ClassicalSimStrategy>(g, params.r);
  if (name == "majority") return std::make_unique<MajorityStrategy>(g);
  if (name == "random_guess") return std::make_unique<RandomGuessStrategy>(g);
  if (name == "resample") {
    if (!params.t) throw std::invalid_argument("resample needs t");
    return std::make_unique<ResampleStrategy>(g, params.k, params.r,
                                              *params.t);
  }
  throw std::invalid_argument("unknown strategy: " + name);
}

}  // namespace exlab
