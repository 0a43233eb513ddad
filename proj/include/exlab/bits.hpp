#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace exlab {

// Fixed-length bit string. Bit 1 is the most significant bit of `value`,
// so an n-bit string's integer value equals its computational-basis index.
struct BitString {
  std::uint64_t value = 0;
  int length = 0;

  BitString() = default;
  BitString(std::uint64_t v, int len) : value(v), length(len) {
    if (len < 0 || len > 63) throw std::invalid_argument("bit length out of range");
    if (len < 64 && (v >> len) != 0)
      throw std::invalid_argument("bit value exceeds length");
  }

  // 1-based; bit(1) is the leftmost bit.
  int bit(int pos) const {
    if (pos < 1 || pos > length) throw std::out_of_range("bit position");
    return static_cast<int>((value >> (length - pos)) & 1u);
  }

  int weight() const { return std::popcount(value); }

  BitString complemented() const {
    const std::uint64_t mask =
        length == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << length) - 1);
    return BitString(~value & mask, length);
  }

  std::string str() const {
    std::string s(static_cast<std::size_t>(length), '0');
    for (int i = 1; i <= length; ++i)
      if (bit(i)) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
  }

  static BitString parse(const std::string& s) {
    if (s.size() > 63) throw std::invalid_argument("bit string too long");
    std::uint64_t v = 0;
    for (char c : s) {
      if (c != '0' && c != '1') throw std::invalid_argument("bad bit character");
      v = (v << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return BitString(v, static_cast<int>(s.size()));
  }

  friend bool operator==(const BitString&, const BitString&) = default;
};

}  // namespace exlab
