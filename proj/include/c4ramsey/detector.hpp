#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "c4ramsey/core.hpp"

namespace c4r {

// Per-color neighborhood bitsets N_c(v). Colors are 1-based.
class ColorAdjacency {
 public:
  using Word = std::uint64_t;

  ColorAdjacency(int vertex_count, int colors);
  explicit ColorAdjacency(const Coloring& c);

  int vertex_count() const { return vertex_count_; }
  int colors() const { return colors_; }
  int words() const { return words_; }

  std::span<const Word> row(int color, Vertex v) const {
    return {bits_.data() + offset(color, v), static_cast<std::size_t>(words_)};
  }
  bool has(int color, Vertex u, Vertex v) const {
    return (bits_[offset(color, u) + (v >> 6)] >> (v & 63)) & 1U;
  }
  void add(int color, Vertex u, Vertex v) {
    bits_[offset(color, u) + (v >> 6)] |= Word{1} << (v & 63);
    bits_[offset(color, v) + (u >> 6)] |= Word{1} << (u & 63);
  }
  void remove(int color, Vertex u, Vertex v) {
    bits_[offset(color, u) + (v >> 6)] &= ~(Word{1} << (v & 63));
    bits_[offset(color, v) + (u >> 6)] &= ~(Word{1} << (u & 63));
  }

  // |N_c(x) ∩ N_c(y)|
  int common(int color, Vertex x, Vertex y) const {
    const Word* a = bits_.data() + offset(color, x);
    const Word* b = bits_.data() + offset(color, y);
    int total = 0;
    for (int w = 0; w < words_; ++w) total += std::popcount(a[w] & b[w]);
    return total;
  }

 private:
  std::size_t offset(int color, Vertex v) const {
    return (static_cast<std::size_t>(color - 1) * vertex_count_ + v) * words_;
  }

  int vertex_count_;
  int colors_;
  int words_;
  std::vector<Word> bits_;
};

// First monochromatic C4 in scan order: color ascending, then diagonal pair
// (x, y) lexicographic; the witness is x-a-y-b with a < b the two smallest
// common neighbors. Uncolored edges are ignored.
std::optional<C4Witness> find_mono_c4(const Coloring& c);

// Number of distinct monochromatic 4-cycles. Every cycle has two diagonals,
// so this is half of sum_{color, x<y} binom(common_color(x, y), 2).
std::uint64_t count_mono_c4(const Coloring& c);

// Whether coloring the currently uncolored edge {u, v} with `color` closes a
// monochromatic C4: some x in N_color(u) has a neighbor in N_color(v).
bool creates_mono_c4(const ColorAdjacency& adjacency, Vertex u, Vertex v, int color);
bool creates_mono_c4(const Coloring& c, const ColorAdjacency& adjacency, Vertex u, Vertex v,
                     int color);

// Monochromatic 4-cycles in `color` that use the edge {u, v}, i.e. paths
// u-x-w-v of color `color` with x != v and w != u. Valid whether or not {u, v}
// itself is currently present in that color.
std::uint64_t cycles_through_edge(const ColorAdjacency& adjacency, Vertex u, Vertex v,
                                  int color);

namespace reference {

// Serial kernels over the plain color matrix, kept to check the bitset code.
std::optional<C4Witness> find_mono_c4_serial(const Coloring& c);
std::uint64_t count_mono_c4_serial(const Coloring& c);

}  // namespace reference

}  // namespace c4r
