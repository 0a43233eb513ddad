#include "exlab/game.hpp"

#include <numeric>
#include <stdexcept>

namespace exlab {

void validate_index_set(const std::vector<int>& y, int n) {
  if (y.empty() || static_cast<int>(y.size()) > n)
    throw std::invalid_argument("index set size out of range");
  int prev = 0;
  for (int q : y) {
    if (q <= prev) throw std::invalid_argument("indices must strictly ascend");
    if (q > n) throw std::out_of_range("index exceeds string length");
    prev = q;
  }
}

BitString restrict_bits(const BitString& x, const std::vector<int>& y) {
  validate_index_set(y, x.length);
  std::uint64_t v = 0;
  for (int q : y) v = (v << 1) | static_cast<std::uint64_t>(x.bit(q));
  return BitString(v, static_cast<int>(y.size()));
}

bool is_win(const BitString& x, const std::vector<int>& y,
            const BitString& z) {
  if (z.length != static_cast<int>(y.size()))
    throw std::invalid_argument("answer length must equal |y|");
  return z != restrict_bits(x, y);
}

std::uint64_t input_count(int n, int m) {
  return (std::uint64_t{1} << n) * binomial(n, m).convert_to<std::uint64_t>();
}

std::vector<int> first_subset(int m) {
  std::vector<int> y(static_cast<std::size_t>(m));
  std::iota(y.begin(), y.end(), 1);
  return y;
}

bool next_subset(std::vector<int>& y, int n) {
  const int m = static_cast<int>(y.size());
  int i = m - 1;
  while (i >= 0 && y[static_cast<std::size_t>(i)] == n - (m - 1 - i)) --i;
  if (i < 0) return false;
  ++y[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < m; ++j)
    y[static_cast<std::size_t>(j)] = y[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

void for_each_input(int n, int m,
                    const std::function<void(const InputPair&)>& visit,
                    int cap) {
  if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
  if (n > cap)
    throw std::invalid_argument(
        "exhaustive enumeration cap exceeded; use sampled mode or raise the cap");
  for (std::uint64_t xv = 0; xv < (std::uint64_t{1} << n); ++xv) {
    InputPair p{BitString(xv, n), first_subset(m)};
    do {
      visit(p);
    } while (next_subset(p.y, n));
  }
}

std::vector<InputPair> enumerate_inputs(int n, int m, int cap) {
  std::vector<InputPair> out;
  out.reserve(input_count(n, m));
  for_each_input(n, m, [&](const InputPair& p) { out.push_back(p); }, cap);
  return out;
}

}  // namespace exlab
