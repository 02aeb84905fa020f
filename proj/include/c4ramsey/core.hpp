#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace c4r {

using Vertex = std::int32_t;
using EdgeId = std::int64_t;
// Stored edge color. 0 means "uncolored" in partial colorings and "no edge" in files.
using Color = std::uint8_t;

inline constexpr int kMaxColors = 255;

// Shape of the complete multipartite graph K_n^p: `parts` independent sets of
// `part_size` vertices. Part i owns the contiguous vertex block [i*n, (i+1)*n).
struct PartitionSpec {
  int parts = 2;
  int part_size = 1;

  constexpr int vertex_count() const { return parts * part_size; }
  constexpr EdgeId edge_count() const {
    return static_cast<EdgeId>(part_size) * part_size * parts * (parts - 1) / 2;
  }
  constexpr int part_of(Vertex v) const { return v / part_size; }
  constexpr bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }
  constexpr bool adjacent(Vertex u, Vertex v) const { return part_of(u) != part_of(v); }

  friend constexpr bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

// Throws std::invalid_argument unless parts >= 2 and part_size >= 1.
void validate(const PartitionSpec& spec);

// Dense position of the cross-partition pair {u, v} under row-major
// enumeration of pairs u < v. Returns nullopt for same-partition pairs.
// Throws std::out_of_range if either vertex is outside [0, p*n).
std::optional<EdgeId> edge_index(const PartitionSpec& spec, Vertex u, Vertex v);

// Lookup tables shared by every coloring over the same PartitionSpec.
class EdgeIndex {
 public:
  explicit EdgeIndex(PartitionSpec spec);

  const PartitionSpec& spec() const { return spec_; }
  EdgeId size() const { return static_cast<EdgeId>(endpoints_.size()); }
  // -1 when u and v share a part.
  EdgeId at(Vertex u, Vertex v) const {
    return lookup_[static_cast<std::size_t>(u) * spec_.vertex_count() + v];
  }
  std::pair<Vertex, Vertex> endpoints(EdgeId e) const { return endpoints_[e]; }
  std::span<const std::pair<Vertex, Vertex>> all_endpoints() const { return endpoints_; }

 private:
  PartitionSpec spec_;
  std::vector<EdgeId> lookup_;
  std::vector<std::pair<Vertex, Vertex>> endpoints_;
};

// A (possibly partial) k-edge-coloring of K_n^p, stored densely by edge index.
class Coloring {
 public:
  Coloring(PartitionSpec spec, int colors);

  const PartitionSpec& spec() const { return index_->spec(); }
  int colors() const { return colors_; }
  EdgeId edge_count() const { return index_->size(); }
  const EdgeIndex& index() const { return *index_; }

  // Color of {u, v}; 0 when uncolored or when u, v share a part.
  Color at(Vertex u, Vertex v) const;
  // Throws std::invalid_argument for same-partition pairs or colors outside [0, k].
  void set(Vertex u, Vertex v, Color c);

  Color edge_color(EdgeId e) const { return assignment_[e]; }
  void set_edge_color(EdgeId e, Color c) { assignment_[e] = c; }
  std::span<const Color> edge_colors() const { return assignment_; }

  bool is_complete() const;

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.spec() == b.spec() && a.colors_ == b.colors_ && a.assignment_ == b.assignment_;
  }

 private:
  std::shared_ptr<const EdgeIndex> index_;
  int colors_;
  std::vector<Color> assignment_;
};

// deg_i(v): edges at v carrying `color`.
int color_class_degree(const Coloring& c, Vertex v, int color);

// Monochromatic quadrilateral v0-v1-v2-v3-v0.
struct C4Witness {
  std::array<Vertex, 4> vertices{};
  int color = 0;

  friend bool operator==(const C4Witness&, const C4Witness&) = default;
};

// Checks distinctness and that all four cycle edges exist and carry `color`.
bool is_valid_witness(const Coloring& c, const C4Witness& w);

std::string to_string(const C4Witness& w);

// --- coloring text format --------------------------------------------------
//
//   p n k
//   <p*n rows of p*n integers, symmetric, 0 on same-partition pairs>

class ParseError : public std::runtime_error {
 public:
  // row/column are 1-based matrix coordinates; 0 when not applicable.
  ParseError(const std::string& what, int row = 0, int column = 0);
  int row() const { return row_; }
  int column() const { return column_; }

 private:
  int row_;
  int column_;
};

Coloring read_coloring(std::istream& in);
Coloring parse_coloring(std::string_view text);
Coloring load_coloring(const std::string& path);

// Uncolored cross pairs are written as 0; such files will not parse back.
void write_coloring(std::ostream& out, const Coloring& c);
std::string format_coloring(const Coloring& c);

}  // namespace c4r
