#include "exlab/encoding.hpp"

#include <cmath>
#include <stdexcept>

#include "exlab/rational.hpp"

namespace exlab {

namespace {

// sign + r fraction bits for b in [-1, 1], truncating |b| toward zero.
// |b| = 1 maps to the all-ones fraction, still within 2^{-r} of the input.
std::uint64_t truncate_component(double b, int r) {
  const std::uint64_t cap = (std::uint64_t{1} << r) - 1;
  double mag = std::abs(b);
  if (mag > 1.0) throw std::domain_error("amplitude component exceeds 1");
  auto frac = static_cast<std::uint64_t>(std::floor(std::ldexp(mag, r)));
  if (frac > cap) frac = cap;
  const std::uint64_t sign = b < 0.0 ? 1 : 0;
  return (sign << r) | frac;
}

}  // namespace

ClassicalEncoding quantize_amplitudes(const AmplitudeVector& state,
                                      double epsilon) {
  const auto r = dyadic_exponent(epsilon);
  if (!r) throw std::invalid_argument("epsilon must be 2^-r with r >= 1");
  if (r > 62) throw std::invalid_argument("accuracy exponent too large");
  if (!state.is_normalized())
    throw std::invalid_argument("quantize_amplitudes: unnormalized state");

  ClassicalEncoding enc;
  enc.t = state.num_qubits();
  enc.r = *r;
  enc.payload.assign((enc.bit_length() + 7) / 8, 0);

  std::size_t pos = 0;
  const int block = enc.r + 1;
  for (std::size_t j = 0; j < state.dim(); ++j) {
    for (const double comp : {state[j].real(), state[j].imag()}) {
      const std::uint64_t bits = truncate_component(comp, enc.r);
      for (int i = block - 1; i >= 0; --i)
        enc.set_bit(pos++, static_cast<int>((bits >> i) & 1u));
    }
  }
  return enc;
}

AmplitudeVector decode_and_normalize(const ClassicalEncoding& enc) {
  const std::size_t dim = std::size_t{1} << enc.t;
  if (enc.payload.size() != (enc.bit_length() + 7) / 8)
    throw std::invalid_argument("payload size mismatch");

  std::vector<cplx> amps(dim);
  std::size_t pos = 0;
  auto read_component = [&] {
    const int sign = enc.get_bit(pos++);
    std::uint64_t frac = 0;
    for (int i = 0; i < enc.r; ++i)
      frac = (frac << 1) | static_cast<std::uint64_t>(enc.get_bit(pos++));
    const double mag = std::ldexp(static_cast<double>(frac), -enc.r);
    return sign ? -mag : mag;
  };
  for (std::size_t j = 0; j < dim; ++j) {
    const double re = read_component();
    const double im = read_component();
    amps[j] = {re, im};
  }

  AmplitudeVector v(enc.t, std::move(amps));
  const double nu = std::sqrt(v.norm_sq());
  if (nu == 0.0) throw std::domain_error("decode: all-zero payload");
  for (std::size_t j = 0; j < v.dim(); ++j) v[j] /= nu;
  return v;
}

int accuracy_exponent_for_zero_error(int m, int q) {
  if (m < 1 || q < 1) throw std::invalid_argument("need m, q >= 1");
  // Largest 2^-r <= 2^-(m+q)/20: since 16 < 20 <= 32, r = m + q + 5.
  return m + q + 5;
}

double accuracy_for_zero_error(int m, int q) {
  return std::ldexp(1.0, -accuracy_exponent_for_zero_error(m, q));
}

}  // namespace exlab
