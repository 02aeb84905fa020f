#pragma once

// Brute-force oracles. Deliberately naive and independent of the bitset
// kernels: they only read colors through Coloring::at.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "c4ramsey/core.hpp"

namespace c4r::oracle {

// All monochromatic 4-cycles, enumerating every 4-subset and its three
// cyclic orders.
inline std::uint64_t brute_c4_count(const Coloring& c) {
  const int n = c.spec().vertex_count();
  std::uint64_t total = 0;
  auto mono = [&](Vertex a, Vertex b, Vertex x, Vertex y) {
    const Color col = c.at(a, b);
    return col != 0 && c.at(b, x) == col && c.at(x, y) == col && c.at(y, a) == col;
  };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex x = b + 1; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
          total += mono(a, b, x, y) + mono(a, b, y, x) + mono(a, x, b, y);
  return total;
}

inline std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

// Minimum of sum binom(a_i, 2) over every nonnegative m-tuple summing to M.
// The sum is symmetric, so nondecreasing tuples cover every case.
inline std::int64_t brute_min_pair_sum(int total, int m) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::function<void(int, int, int, std::int64_t)> rec = [&](int i, int rem, int lo,
                                                             std::int64_t acc) {
    if (i == m - 1) {
      if (rem >= lo) best = std::min(best, acc + choose2(rem));
      return;
    }
    for (int x = lo; x * (m - i) <= rem; ++x) rec(i + 1, rem - x, x, acc + choose2(x));
  };
  rec(0, total, 0, 0);
  return best;
}

// Complete coloring with uniform random colors.
inline Coloring random_coloring(const PartitionSpec& spec, int k, std::mt19937_64& rng) {
  Coloring c(spec, k);
  for (EdgeId e = 0; e < c.edge_count(); ++e)
    c.set_edge_color(e, static_cast<Color>(rng() % k + 1));
  return c;
}

// Every coloring of the given shape, edge colors in [1, k] (k^E of them).
inline void for_each_coloring(const PartitionSpec& spec, int k,
                              const std::function<void(const Coloring&)>& visit) {
  Coloring c(spec, k);
  const EdgeId edges = c.edge_count();
  std::vector<int> digits(static_cast<std::size_t>(edges), 1);
  while (true) {
    for (EdgeId e = 0; e < edges; ++e) c.set_edge_color(e, static_cast<Color>(digits[e]));
    visit(c);
    EdgeId i = 0;
    while (i < edges && digits[i] == k) digits[i++] = 1;
    if (i == edges) return;
    ++digits[i];
  }
}

}  // namespace c4r::oracle
