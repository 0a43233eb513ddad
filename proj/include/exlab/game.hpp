#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "exlab/bits.hpp"
#include "exlab/rational.hpp"

namespace exlab {

// The exclusion game EXC_{n,m,gamma}: Alice holds an n-bit x, Bob holds an
// m-element subset y of {1..n}, and Bob wins by naming any m-bit string
// other than x restricted to y. gamma is the tolerated error probability.
struct GameInstance {
  int n = 1;
  int m = 1;
  Rational gamma = 0;

  GameInstance(int n_, int m_, Rational gamma_ = 0)
      : n(n_), m(m_), gamma(std::move(gamma_)) {
    if (n < 1 || m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
    if (gamma < 0 || gamma >= 1) throw std::invalid_argument("need 0 <= gamma < 1");
  }
};

struct InputPair {
  BitString x;
  std::vector<int> y;  // 1-based, strictly ascending
};

void validate_index_set(const std::vector<int>& y, int n);

// x restricted to the positions in y, ascending order.
BitString restrict_bits(const BitString& x, const std::vector<int>& y);

bool is_win(const BitString& x, const std::vector<int>& y, const BitString& z);

inline constexpr int kDefaultEnumerationCap = 12;

std::uint64_t input_count(int n, int m);

// Visits all 2^n * C(n,m) input pairs in lexicographic order (x major,
// y minor). Throws if n exceeds the cap.
void for_each_input(int n, int m,
                    const std::function<void(const InputPair&)>& visit,
                    int cap = kDefaultEnumerationCap);

std::vector<InputPair> enumerate_inputs(int n, int m,
                                        int cap = kDefaultEnumerationCap);

// First m-subset of {1..n} in lexicographic order.
std::vector<int> first_subset(int m);

// Advances to the next m-subset; false when exhausted.
bool next_subset(std::vector<int>& y, int n);

}  // namespace exlab
