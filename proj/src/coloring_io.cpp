#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "c4ramsey/core.hpp"

namespace c4r {

namespace {

std::string located(const std::string& what, int row, int column) {
  if (row == 0) return what;
  std::ostringstream os;
  os << "row " << row;
  if (column > 0) os << ", column " << column;
  os << ": " << what;
  return os.str();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view tok, long long& value) {
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

ParseError::ParseError(const std::string& what, int row, int column)
    : std::runtime_error(located(what, row, column)), row_(row), column_(column) {}

Coloring read_coloring(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty input, expected header 'p n k'");
  const auto header = split_ws(line);
  long long p = 0, n = 0, k = 0;
  if (header.size() != 3 || !to_int(header[0], p) || !to_int(header[1], n) ||
      !to_int(header[2], k))
    throw ParseError("header must be three integers 'p n k'");
  if (p < 2 || n < 1 || k < 1 || k > kMaxColors || p * n > (1 << 15))
    throw ParseError("header values out of range (need p >= 2, n >= 1, 1 <= k <= 255)");

  const PartitionSpec spec{static_cast<int>(p), static_cast<int>(n)};
  const int total = spec.vertex_count();
  std::vector<int> matrix(static_cast<std::size_t>(total) * total);
  for (int row = 0; row < total; ++row) {
    if (!std::getline(in, line))
      throw ParseError("truncated input, expected " + std::to_string(total) + " matrix rows",
                       row + 1);
    const auto tokens = split_ws(line);
    for (int col = 0; col < static_cast<int>(tokens.size()) && col < total; ++col) {
      long long value = 0;
      if (!to_int(tokens[col], value)) throw ParseError("not an integer", row + 1, col + 1);
      matrix[static_cast<std::size_t>(row) * total + col] = static_cast<int>(value);
      if (value < 0 || value > k)
        throw ParseError("color out of range [0, " + std::to_string(k) + "]", row + 1, col + 1);
    }
    if (static_cast<int>(tokens.size()) != total)
      throw ParseError("expected " + std::to_string(total) + " entries, found " +
                           std::to_string(tokens.size()),
                       row + 1, static_cast<int>(std::min<std::size_t>(tokens.size(), total)) + 1);
  }
  while (std::getline(in, line))
    if (!split_ws(line).empty()) throw ParseError("trailing data after matrix", total + 2);

  Coloring coloring(spec, static_cast<int>(k));
  for (int i = 0; i < total; ++i) {
    for (int j = 0; j < total; ++j) {
      const int value = matrix[static_cast<std::size_t>(i) * total + j];
      if (!spec.adjacent(i, j)) {
        if (value != 0) throw ParseError("nonzero entry inside a partition", i + 1, j + 1);
        continue;
      }
      if (value == 0) throw ParseError("missing color on a cross-partition pair", i + 1, j + 1);
      if (j > i && matrix[static_cast<std::size_t>(j) * total + i] != value)
        throw ParseError("matrix is not symmetric", i + 1, j + 1);
      if (j > i) coloring.set(i, j, static_cast<Color>(value));
    }
  }
  return coloring;
}

Coloring parse_coloring(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_coloring(in);
}

Coloring load_coloring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_coloring(in);
}

void write_coloring(std::ostream& out, const Coloring& c) {
  const auto& spec = c.spec();
  const int total = spec.vertex_count();
  out << spec.parts << ' ' << spec.part_size << ' ' << c.colors() << '\n';
  for (Vertex i = 0; i < total; ++i) {
    for (Vertex j = 0; j < total; ++j) {
      if (j > 0) out << ' ';
      out << static_cast<int>(c.at(i, j));
    }
    out << '\n';
  }
}

std::string format_coloring(const Coloring& c) {
  std::ostringstream os;
  write_coloring(os, c);
  return os.str();
}

}  // namespace c4r
