#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c4ramsey/core.hpp"

namespace c4r {

using ColorMatrix = std::vector<std::vector<Color>>;

// Circulant expansion: row i is the first row rotated right by i positions,
// so row 1 of (a b c d e) is (e a b c d).
ColorMatrix expand_circulant(std::span<const Color> first_row);

// A coloring described by circulant blocks on a (block_rows x block_cols)
// grid of b x b blocks. Keys are 1-based (I, J) with I < J; lower blocks are
// the transposes of the upper ones.
struct BlockSpec {
  int block_rows = 0;
  int block_cols = 0;
  int block_size = 0;
  int colors = 0;
  std::map<std::pair<int, int>, std::vector<Color>> first_rows;

  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

// Throws std::invalid_argument on inconsistent dimensions, a block inside a
// partition, a missing cross-partition block, or a color outside [1, k].
Coloring build_from_blocks(const BlockSpec& spec, const PartitionSpec& layout, int k);

// First-rows text format:
//   rows cols b k
//   I J c1 ... cb        (one line per present upper block)
BlockSpec read_block_spec(std::istream& in);
BlockSpec parse_block_spec(std::string_view text);
BlockSpec load_block_spec(const std::string& path);
void write_block_spec(std::ostream& out, const BlockSpec& spec);

class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a64(std::string_view bytes);

// Bundled 4-coloring of K_10^3 with no monochromatic C4, in both encodings.
// Throws IntegrityError if the embedded text fails its checksum.
Coloring fig1_coloring();
BlockSpec fig1_blocks();
std::string_view fig1_matrix_text();
std::string_view fig1_blocks_text();

inline constexpr PartitionSpec kFig1Layout{3, 10};
inline constexpr int kFig1Colors = 4;

}  // namespace c4r
