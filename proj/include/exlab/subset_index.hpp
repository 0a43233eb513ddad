#pragma once

#include <cstdint>
#include <vector>

namespace exlab::detail {

// Basis-index contributions of the qubits in y (kept) and the rest
// (traced), both enumerated MSB-first in ascending qubit order. The full
// index of (kept-pattern u, traced-pattern t) is kept[u] | traced[t].
struct SubsetSplit {
  std::vector<std::uint64_t> kept;
  std::vector<std::uint64_t> traced;
};

inline std::vector<std::uint64_t> scatter_table(
    const std::vector<int>& bit_positions) {
  const std::size_t count = bit_positions.size();
  std::vector<std::uint64_t> table(std::size_t{1} << count);
  for (std::uint64_t pattern = 0; pattern < table.size(); ++pattern) {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < count; ++j)
      if ((pattern >> (count - 1 - j)) & 1u)
        idx |= std::uint64_t{1} << bit_positions[j];
    table[pattern] = idx;
  }
  return table;
}

// y: 1-based ascending qubit indices; qubit q sits at bit (n - q).
inline SubsetSplit make_subset_split(int n, const std::vector<int>& y) {
  std::vector<bool> in_y(static_cast<std::size_t>(n) + 1, false);
  for (int q : y) in_y[static_cast<std::size_t>(q)] = true;
  std::vector<int> kpos, tpos;
  for (int q = 1; q <= n; ++q)
    (in_y[static_cast<std::size_t>(q)] ? kpos : tpos).push_back(n - q);
  return {scatter_table(kpos), scatter_table(tpos)};
}

}  // namespace exlab::detail
