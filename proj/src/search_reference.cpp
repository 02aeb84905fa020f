#include <algorithm>
#include <chrono>

#include "c4ramsey/detector.hpp"
#include "c4ramsey/search.hpp"

namespace c4r::reference {

namespace {

struct SerialDfs {
  const EdgeIndex& index;
  int k;
  const ExhaustiveOptions& options;
  ColorAdjacency adj;
  Coloring coloring;
  SearchStats stats;
  bool exceeded = false;

  bool dfs(EdgeId e, int max_used) {
    if (e == index.size()) return true;
    const auto [u, v] = index.endpoints(e);
    const int limit = options.break_color_symmetry ? std::min(k, max_used + 1) : k;
    for (int c = 1; c <= limit; ++c) {
      if (creates_mono_c4(adj, u, v, c)) {
        ++stats.prunes;
        continue;
      }
      if (++stats.nodes > options.node_budget) {
        exceeded = true;
        return false;
      }
      adj.add(c, u, v);
      coloring.set_edge_color(e, static_cast<Color>(c));
      if (dfs(e + 1, std::max(max_used, c))) return true;
      if (exceeded) return false;
      adj.remove(c, u, v);
      coloring.set_edge_color(e, 0);
    }
    return false;
  }
};

}  // namespace

SearchOutcome exhaustive_search_serial(const PartitionSpec& spec, int k,
                                       const ExhaustiveOptions& options) {
  if (k < 1 || k > kMaxColors) throw std::invalid_argument("color count must be in [1, 255]");
  const auto start = std::chrono::steady_clock::now();
  Coloring coloring(spec, k);
  SerialDfs search{coloring.index(), k, options, ColorAdjacency(spec.vertex_count(), k), coloring,
                   {}};
  SearchOutcome out;
  if (search.dfs(0, 0)) {
    out.kind = SearchResult::witness_found;
    out.witness = search.coloring;
  } else {
    out.kind = search.exceeded ? SearchResult::budget_exceeded : SearchResult::exhausted_none;
  }
  out.stats = search.stats;
  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace c4r::reference
