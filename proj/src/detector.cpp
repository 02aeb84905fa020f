#include "c4ramsey/detector.hpp"

#include <limits>

namespace c4r {

ColorAdjacency::ColorAdjacency(int vertex_count, int colors)
    : vertex_count_(vertex_count), colors_(colors), words_((vertex_count + 63) / 64) {
  bits_.assign(static_cast<std::size_t>(colors_) * vertex_count_ * words_, 0);
}

ColorAdjacency::ColorAdjacency(const Coloring& c)
    : ColorAdjacency(c.spec().vertex_count(), c.colors()) {
  const auto& index = c.index();
  for (EdgeId e = 0; e < index.size(); ++e) {
    const Color color = c.edge_color(e);
    if (color == 0) continue;
    const auto [u, v] = index.endpoints(e);
    add(color, u, v);
  }
}

namespace {

// Lowest witness key (color, x, y) flattened; max() when none.
using Key = std::int64_t;

C4Witness witness_from_key(const ColorAdjacency& adj, Key key) {
  const Key n = adj.vertex_count();
  const int y = static_cast<int>(key % n);
  const int x = static_cast<int>((key / n) % n);
  const int color = static_cast<int>(key / (n * n)) + 1;
  const auto a = adj.row(color, x);
  const auto b = adj.row(color, y);
  std::array<Vertex, 2> found{};
  int got = 0;
  for (int w = 0; w < adj.words() && got < 2; ++w) {
    auto bits = a[w] & b[w];
    while (bits != 0 && got < 2) {
      found[got++] = w * 64 + std::countr_zero(bits);
      bits &= bits - 1;
    }
  }
  return C4Witness{{x, found[0], y, found[1]}, color};
}

}  // namespace

std::optional<C4Witness> find_mono_c4(const Coloring& c) {
  const ColorAdjacency adj(c);
  const int n = adj.vertex_count();
  const Key rows = static_cast<Key>(adj.colors()) * n;
  Key best = std::numeric_limits<Key>::max();

#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (Key row = 0; row < rows; ++row) {
    const int color = static_cast<int>(row / n) + 1;
    const int x = static_cast<int>(row % n);
    for (int y = x + 1; y < n; ++y) {
      if (adj.common(color, x, y) >= 2) {
        best = std::min(best, row * n + y);
        break;
      }
    }
  }
  if (best == std::numeric_limits<Key>::max()) return std::nullopt;
  return witness_from_key(adj, best);
}

std::uint64_t count_mono_c4(const Coloring& c) {
  const ColorAdjacency adj(c);
  const int n = adj.vertex_count();
  const std::int64_t rows = static_cast<std::int64_t>(adj.colors()) * n;
  std::uint64_t pair_sum = 0;

#pragma omp parallel for schedule(dynamic, 8) reduction(+ : pair_sum)
  for (std::int64_t row = 0; row < rows; ++row) {
    const int color = static_cast<int>(row / n) + 1;
    const int x = static_cast<int>(row % n);
    for (int y = x + 1; y < n; ++y) {
      const std::uint64_t m = static_cast<std::uint64_t>(adj.common(color, x, y));
      if (m >= 2) pair_sum += m * (m - 1) / 2;
    }
  }
  return pair_sum / 2;
}

bool creates_mono_c4(const ColorAdjacency& adj, Vertex u, Vertex v, int color) {
  const auto nu = adj.row(color, u);
  const auto nv = adj.row(color, v);
  for (int w = 0; w < adj.words(); ++w) {
    auto bits = nu[w];
    while (bits != 0) {
      const Vertex x = w * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      if (x == v) continue;
      const auto nx = adj.row(color, x);
      for (int t = 0; t < adj.words(); ++t) {
        auto hit = nx[t] & nv[t];
        if (t == (u >> 6)) hit &= ~(ColorAdjacency::Word{1} << (u & 63));
        if (hit != 0) return true;
      }
    }
  }
  return false;
}

bool creates_mono_c4(const Coloring& c, const ColorAdjacency& adjacency, Vertex u, Vertex v,
                     int color) {
  if (!c.spec().contains(u) || !c.spec().contains(v)) throw std::out_of_range("vertex out of range");
  if (color < 1 || color > c.colors()) throw std::out_of_range("color out of range");
  return creates_mono_c4(adjacency, u, v, color);
}

std::uint64_t cycles_through_edge(const ColorAdjacency& adj, Vertex u, Vertex v, int color) {
  const auto nu = adj.row(color, u);
  const auto nv = adj.row(color, v);
  std::uint64_t total = 0;
  for (int w = 0; w < adj.words(); ++w) {
    auto bits = nu[w];
    while (bits != 0) {
      const Vertex x = w * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      if (x == v) continue;
      const auto nx = adj.row(color, x);
      for (int t = 0; t < adj.words(); ++t) {
        auto hit = nx[t] & nv[t];
        if (t == (u >> 6)) hit &= ~(ColorAdjacency::Word{1} << (u & 63));
        total += static_cast<std::uint64_t>(std::popcount(hit));
      }
    }
  }
  return total;
}

}  // namespace c4r
