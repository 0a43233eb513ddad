#pragma once

#include <cstdint>
#include <vector>

#include "exlab/linalg.hpp"

namespace exlab {

// Bit-exact classical description of a t-qubit state: each amplitude's real
// and imaginary part is stored as a sign bit (1 = negative) followed by r
// truncated fraction bits, most significant first. Blocks are ordered
// b_1, c_1, b_2, c_2, ..., packed MSB-first into bytes and zero-padded at
// the end to a byte boundary.
struct ClassicalEncoding {
  int t = 0;
  int r = 1;
  std::vector<std::uint8_t> payload;

  std::size_t bit_length() const {
    return (std::size_t{2} << t) * static_cast<std::size_t>(r + 1);
  }

  int get_bit(std::size_t pos) const {
    return (payload[pos >> 3] >> (7 - (pos & 7))) & 1;
  }
  void set_bit(std::size_t pos, int bit) {
    if (bit) payload[pos >> 3] |= static_cast<std::uint8_t>(0x80u >> (pos & 7));
  }
};

// Truncate-toward-zero quantization of every amplitude component to
// accuracy epsilon = 2^{-r}. Throws unless epsilon is a power of two with
// r >= 1 and the state is normalized.
ClassicalEncoding quantize_amplitudes(const AmplitudeVector& state,
                                      double epsilon);

// Rebuilds the amplitude vector, divides by its 2-norm. Throws on an
// all-zero payload.
AmplitudeVector decode_and_normalize(const ClassicalEncoding& enc);

// Largest power of two <= 2^{-(m+q)}/20; the value the zero-error classical
// simulation must quantize at.
double accuracy_for_zero_error(int m, int q);
int accuracy_exponent_for_zero_error(int m, int q);

}  // namespace exlab
