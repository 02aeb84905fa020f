#include "c4ramsey/construct.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace c4r {

namespace bundled {
extern const std::string_view fig1_matrix;
extern const std::string_view fig1_blocks;
}  // namespace bundled

namespace {

constexpr std::uint64_t kFig1MatrixChecksum = 0x8980cc3543c631e3ULL;
constexpr std::uint64_t kFig1BlocksChecksum = 0x8f07b170a98c2776ULL;

std::string_view checked(std::string_view text, std::uint64_t expected, const char* name) {
  if (fnv1a64(text) != expected)
    throw IntegrityError(std::string("bundled ") + name + " failed its checksum");
  return text;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ColorMatrix expand_circulant(std::span<const Color> first_row) {
  const std::size_t b = first_row.size();
  if (b == 0) throw std::invalid_argument("circulant first row must be nonempty");
  ColorMatrix out(b, std::vector<Color>(b));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) out[i][j] = first_row[(j + b - i) % b];
  return out;
}

Coloring build_from_blocks(const BlockSpec& spec, const PartitionSpec& layout, int k) {
  validate(layout);
  const int b = spec.block_size;
  if (b < 1) throw std::invalid_argument("block size must be at least 1");
  if (spec.block_rows != spec.block_cols) throw std::invalid_argument("block grid must be square");
  if (spec.block_rows * b != layout.vertex_count())
    throw std::invalid_argument("block grid does not cover p*n vertices");
  if (layout.part_size % b != 0)
    throw std::invalid_argument("blocks would straddle a partition boundary");

  auto part_of_block = [&](int block) { return ((block - 1) * b) / layout.part_size; };
  for (const auto& [pos, row] : spec.first_rows) {
    const auto [I, J] = pos;
    if (I < 1 || J > spec.block_cols || I >= J)
      throw std::invalid_argument("block position must satisfy 1 <= I < J <= cols");
    if (part_of_block(I) == part_of_block(J))
      throw std::invalid_argument("block (" + std::to_string(I) + "," + std::to_string(J) +
                                  ") lies inside a partition");
    if (static_cast<int>(row.size()) != b)
      throw std::invalid_argument("first row length differs from block size");
    for (Color c : row)
      if (c < 1 || c > k) throw std::invalid_argument("block color out of range");
  }

  Coloring out(layout, k);
  for (int I = 1; I <= spec.block_rows; ++I) {
    for (int J = I + 1; J <= spec.block_cols; ++J) {
      if (part_of_block(I) == part_of_block(J)) continue;
      const auto it = spec.first_rows.find({I, J});
      if (it == spec.first_rows.end())
        throw std::invalid_argument("missing cross-partition block (" + std::to_string(I) + "," +
                                    std::to_string(J) + ")");
      const ColorMatrix block = expand_circulant(it->second);
      for (int r = 0; r < b; ++r)
        for (int c = 0; c < b; ++c) out.set((I - 1) * b + r, (J - 1) * b + c, block[r][c]);
    }
  }
  return out;
}

BlockSpec read_block_spec(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&](std::istringstream& fields) {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      fields = std::istringstream(line);
      return true;
    }
    return false;
  };

  std::istringstream fields;
  if (!next_line(fields)) throw ParseError("empty input, expected header 'rows cols b k'");
  BlockSpec spec;
  if (!(fields >> spec.block_rows >> spec.block_cols >> spec.block_size >> spec.colors) ||
      spec.block_rows < 1 || spec.block_cols < 1 || spec.block_size < 1 || spec.colors < 1 ||
      spec.colors > kMaxColors)
    throw ParseError("header must be positive integers 'rows cols b k'", line_no);
  std::string extra;
  if (fields >> extra) throw ParseError("trailing data after header", line_no);

  while (next_line(fields)) {
    int I = 0, J = 0;
    if (!(fields >> I >> J)) throw ParseError("expected block position 'I J'", line_no);
    std::vector<Color> row;
    int value = 0;
    while (fields >> value) {
      if (value < 1 || value > spec.colors)
        throw ParseError("color out of range", line_no, static_cast<int>(row.size()) + 3);
      row.push_back(static_cast<Color>(value));
    }
    if (!fields.eof()) throw ParseError("not an integer", line_no, static_cast<int>(row.size()) + 3);
    if (static_cast<int>(row.size()) != spec.block_size)
      throw ParseError("expected " + std::to_string(spec.block_size) + " colors", line_no);
    if (!spec.first_rows.emplace(std::pair{I, J}, std::move(row)).second)
      throw ParseError("duplicate block", line_no);
  }
  return spec;
}

BlockSpec parse_block_spec(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_block_spec(in);
}

BlockSpec load_block_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_block_spec(in);
}

void write_block_spec(std::ostream& out, const BlockSpec& spec) {
  out << spec.block_rows << ' ' << spec.block_cols << ' ' << spec.block_size << ' ' << spec.colors
      << '\n';
  for (const auto& [pos, row] : spec.first_rows) {
    out << pos.first << ' ' << pos.second;
    for (Color c : row) out << ' ' << static_cast<int>(c);
    out << '\n';
  }
}

std::string_view fig1_matrix_text() {
  return checked(bundled::fig1_matrix, kFig1MatrixChecksum, "K_10^3 matrix");
}

std::string_view fig1_blocks_text() {
  return checked(bundled::fig1_blocks, kFig1BlocksChecksum, "K_10^3 first rows");
}

Coloring fig1_coloring() { return parse_coloring(fig1_matrix_text()); }

BlockSpec fig1_blocks() { return parse_block_spec(fig1_blocks_text()); }

}  // namespace c4r
