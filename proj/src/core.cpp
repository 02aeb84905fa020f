#include "c4ramsey/core.hpp"

#include <algorithm>
#include <sstream>

namespace c4r {

void validate(const PartitionSpec& spec) {
  if (spec.parts < 2) throw std::invalid_argument("partition count must be at least 2");
  if (spec.part_size < 1) throw std::invalid_argument("part size must be at least 1");
  // Edge lookup tables are (p*n)^2; keep them addressable.
  if (static_cast<std::int64_t>(spec.parts) * spec.part_size > 1 << 15)
    throw std::invalid_argument("graph too large (more than 32768 vertices)");
}

std::optional<EdgeId> edge_index(const PartitionSpec& spec, Vertex u, Vertex v) {
  if (!spec.contains(u) || !spec.contains(v))
    throw std::out_of_range("vertex out of range");
  if (u > v) std::swap(u, v);
  const std::int64_t n = spec.part_size;
  const std::int64_t total = spec.vertex_count();
  const std::int64_t pu = spec.part_of(u);
  if (pu == spec.part_of(v)) return std::nullopt;
  // A vertex in part q has total - (q+1)*n later cross-partition partners.
  const std::int64_t whole_parts = n * (pu * total - n * pu * (pu + 1) / 2);
  const std::int64_t row_len = total - (pu + 1) * n;
  return whole_parts + (u - pu * n) * row_len + (v - (pu + 1) * n);
}

EdgeIndex::EdgeIndex(PartitionSpec spec) : spec_(spec) {
  validate(spec_);
  const int total = spec_.vertex_count();
  lookup_.assign(static_cast<std::size_t>(total) * total, -1);
  endpoints_.reserve(static_cast<std::size_t>(spec_.edge_count()));
  for (Vertex u = 0; u < total; ++u) {
    for (Vertex v = (spec_.part_of(u) + 1) * spec_.part_size; v < total; ++v) {
      const EdgeId e = static_cast<EdgeId>(endpoints_.size());
      lookup_[static_cast<std::size_t>(u) * total + v] = e;
      lookup_[static_cast<std::size_t>(v) * total + u] = e;
      endpoints_.emplace_back(u, v);
    }
  }
}

Coloring::Coloring(PartitionSpec spec, int colors)
    : index_(std::make_shared<const EdgeIndex>(spec)), colors_(colors) {
  if (colors < 1 || colors > kMaxColors)
    throw std::invalid_argument("color count must be in [1, 255]");
  assignment_.assign(static_cast<std::size_t>(index_->size()), 0);
}

Color Coloring::at(Vertex u, Vertex v) const {
  if (!spec().contains(u) || !spec().contains(v)) throw std::out_of_range("vertex out of range");
  const EdgeId e = index_->at(u, v);
  return e < 0 ? Color{0} : assignment_[e];
}

void Coloring::set(Vertex u, Vertex v, Color c) {
  if (!spec().contains(u) || !spec().contains(v)) throw std::out_of_range("vertex out of range");
  const EdgeId e = index_->at(u, v);
  if (e < 0) throw std::invalid_argument("same-partition pair has no edge");
  if (c > colors_) throw std::invalid_argument("color out of range");
  assignment_[e] = c;
}

bool Coloring::is_complete() const {
  return std::none_of(assignment_.begin(), assignment_.end(), [](Color c) { return c == 0; });
}

int color_class_degree(const Coloring& c, Vertex v, int color) {
  if (!c.spec().contains(v)) throw std::out_of_range("vertex out of range");
  if (color < 1 || color > c.colors()) throw std::out_of_range("color out of range");
  int degree = 0;
  for (Vertex u = 0; u < c.spec().vertex_count(); ++u)
    if (c.at(v, u) == color) ++degree;
  return degree;
}

bool is_valid_witness(const Coloring& c, const C4Witness& w) {
  if (w.color < 1 || w.color > c.colors()) return false;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!c.spec().contains(w.vertices[i])) return false;
    for (std::size_t j = i + 1; j < 4; ++j)
      if (w.vertices[i] == w.vertices[j]) return false;
  }
  for (std::size_t i = 0; i < 4; ++i)
    if (c.at(w.vertices[i], w.vertices[(i + 1) % 4]) != w.color) return false;
  return true;
}

std::string to_string(const C4Witness& w) {
  std::ostringstream os;
  os << "color=" << w.color << " cycle=" << w.vertices[0] << ' ' << w.vertices[1] << ' '
     << w.vertices[2] << ' ' << w.vertices[3];
  return os.str();
}

}  // namespace c4r
