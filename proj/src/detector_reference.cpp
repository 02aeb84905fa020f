#include "c4ramsey/detector.hpp"

namespace c4r::reference {

namespace {

std::vector<Color> dense_matrix(const Coloring& c) {
  const int n = c.spec().vertex_count();
  std::vector<Color> m(static_cast<std::size_t>(n) * n, 0);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) m[static_cast<std::size_t>(i) * n + j] = c.at(i, j);
  return m;
}

}  // namespace

std::optional<C4Witness> find_mono_c4_serial(const Coloring& c) {
  const int n = c.spec().vertex_count();
  const auto m = dense_matrix(c);
  auto at = [&](Vertex i, Vertex j) { return m[static_cast<std::size_t>(i) * n + j]; };
  for (int color = 1; color <= c.colors(); ++color) {
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        std::vector<Vertex> common;
        for (Vertex z = 0; z < n && common.size() < 2; ++z)
          if (at(x, z) == color && at(y, z) == color) common.push_back(z);
        if (common.size() == 2) return C4Witness{{x, common[0], y, common[1]}, color};
      }
    }
  }
  return std::nullopt;
}

std::uint64_t count_mono_c4_serial(const Coloring& c) {
  const int n = c.spec().vertex_count();
  const auto m = dense_matrix(c);
  auto at = [&](Vertex i, Vertex j) { return m[static_cast<std::size_t>(i) * n + j]; };
  std::uint64_t pair_sum = 0;
  for (int color = 1; color <= c.colors(); ++color) {
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        std::uint64_t common = 0;
        for (Vertex z = 0; z < n; ++z)
          if (at(x, z) == color && at(y, z) == color) ++common;
        if (common >= 2) pair_sum += common * (common - 1) / 2;
      }
    }
  }
  return pair_sum / 2;
}

}  // namespace c4r::reference
