#include "c4ramsey/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>

#include "c4ramsey/detector.hpp"

namespace c4r {

const char* to_string(SearchResult r) {
  switch (r) {
    case SearchResult::witness_found: return "witness_found";
    case SearchResult::exhausted_none: return "exhausted_none";
    case SearchResult::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

namespace {

// Frontier size at which top-level expansion stops. Fixed so that the split,
// and hence every counter, is the same for any number of threads.
constexpr std::size_t kFrontierTarget = 256;

struct Prefix {
  std::vector<Color> colors;
  int max_used = 0;
};

struct SubtreeResult {
  SearchResult kind = SearchResult::exhausted_none;
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  std::vector<Color> witness;
  bool abandoned = false;
};

class SubtreeSearch {
 public:
  SubtreeSearch(const EdgeIndex& index, int k, bool break_symmetry, std::uint64_t cap,
                const std::atomic<std::int64_t>* stop, std::int64_t self)
      : index_(index),
        k_(k),
        break_symmetry_(break_symmetry),
        cap_(cap),
        stop_(stop),
        self_(self),
        adj_(index.spec().vertex_count(), k) {}

  SubtreeResult run(const Prefix& prefix) {
    colors_ = prefix.colors;
    colors_.resize(static_cast<std::size_t>(index_.size()), 0);
    for (std::size_t e = 0; e < prefix.colors.size(); ++e) {
      const auto [u, v] = index_.endpoints(static_cast<EdgeId>(e));
      adj_.add(prefix.colors[e], u, v);
    }
    const bool found = dfs(static_cast<EdgeId>(prefix.colors.size()), prefix.max_used);
    result_.nodes = nodes_;
    result_.prunes = prunes_;
    if (result_.abandoned) return result_;
    if (found) {
      result_.kind = SearchResult::witness_found;
      result_.witness = colors_;
    } else if (exceeded_) {
      result_.kind = SearchResult::budget_exceeded;
    }
    return result_;
  }

 private:
  bool dfs(EdgeId e, int max_used) {
    if (e == index_.size()) return true;
    const auto [u, v] = index_.endpoints(e);
    const int limit = break_symmetry_ ? std::min(k_, max_used + 1) : k_;
    for (int c = 1; c <= limit; ++c) {
      if (creates_mono_c4(adj_, u, v, c)) {
        ++prunes_;
        continue;
      }
      if (++nodes_ > cap_) {
        exceeded_ = true;
        return false;
      }
      if ((nodes_ & 0xFFF) == 0 && stop_ && stop_->load(std::memory_order_relaxed) < self_) {
        result_.abandoned = true;
        return false;
      }
      adj_.add(c, u, v);
      colors_[e] = static_cast<Color>(c);
      if (dfs(e + 1, std::max(max_used, c))) return true;
      adj_.remove(c, u, v);
      colors_[e] = 0;
      if (exceeded_ || result_.abandoned) return false;
    }
    return false;
  }

  const EdgeIndex& index_;
  int k_;
  bool break_symmetry_;
  std::uint64_t cap_;
  const std::atomic<std::int64_t>* stop_;
  std::int64_t self_;
  ColorAdjacency adj_;
  std::vector<Color> colors_;
  std::uint64_t nodes_ = 0;
  std::uint64_t prunes_ = 0;
  bool exceeded_ = false;
  SubtreeResult result_;
};

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

Coloring coloring_from(const PartitionSpec& spec, int k, const std::vector<Color>& colors) {
  Coloring c(spec, k);
  for (std::size_t e = 0; e < colors.size(); ++e) c.set_edge_color(static_cast<EdgeId>(e), colors[e]);
  return c;
}

}  // namespace

SearchOutcome exhaustive_search(const PartitionSpec& spec, int k, const ExhaustiveOptions& options) {
  if (k < 1 || k > kMaxColors) throw std::invalid_argument("color count must be in [1, 255]");
  const auto start = std::chrono::steady_clock::now();
  const EdgeIndex index(spec);
  const EdgeId edges = index.size();
  SearchOutcome out;

  // Breadth-first expansion of the top of the tree, in lexicographic order.
  std::vector<Prefix> frontier{Prefix{}};
  EdgeId depth = 0;
  while (depth < edges && frontier.size() < kFrontierTarget && !frontier.empty()) {
    const auto [u, v] = index.endpoints(depth);
    std::vector<Prefix> next;
    for (const Prefix& node : frontier) {
      ColorAdjacency adj(spec.vertex_count(), k);
      for (std::size_t e = 0; e < node.colors.size(); ++e) {
        const auto [a, b] = index.endpoints(static_cast<EdgeId>(e));
        adj.add(node.colors[e], a, b);
      }
      const int limit = options.break_color_symmetry ? std::min(k, node.max_used + 1) : k;
      for (int c = 1; c <= limit; ++c) {
        if (creates_mono_c4(adj, u, v, c)) {
          ++out.stats.prunes;
          continue;
        }
        if (++out.stats.nodes > options.node_budget) {
          out.kind = SearchResult::budget_exceeded;
          out.stats.elapsed_ms = ms_since(start);
          return out;
        }
        Prefix child = node;
        child.colors.push_back(static_cast<Color>(c));
        child.max_used = std::max(node.max_used, c);
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
    ++depth;
  }

  if (frontier.empty()) {
    out.kind = SearchResult::exhausted_none;
    out.stats.elapsed_ms = ms_since(start);
    return out;
  }
  if (depth == edges) {
    out.kind = SearchResult::witness_found;
    out.witness = coloring_from(spec, k, frontier.front().colors);
    out.stats.elapsed_ms = ms_since(start);
    return out;
  }

  const std::uint64_t cap = options.node_budget - out.stats.nodes;
  const auto count = static_cast<std::int64_t>(frontier.size());
  std::vector<SubtreeResult> results(frontier.size());
  std::atomic<std::int64_t> stop{std::numeric_limits<std::int64_t>::max()};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    if (stop.load(std::memory_order_relaxed) < i) {
      results[i].abandoned = true;
      continue;
    }
    SubtreeSearch search(index, k, options.break_color_symmetry, cap, &stop, i);
    results[i] = search.run(frontier[i]);
    if (!results[i].abandoned && results[i].kind != SearchResult::exhausted_none) {
      std::int64_t seen = stop.load();
      while (i < seen && !stop.compare_exchange_weak(seen, i)) {
      }
    }
  }

  // Resolve in subtree order so the answer matches a sequential scan.
  out.kind = SearchResult::exhausted_none;
  for (std::int64_t i = 0; i < count; ++i) {
    const SubtreeResult& r = results[i];
    out.stats.nodes += r.nodes;
    out.stats.prunes += r.prunes;
    if (r.kind == SearchResult::budget_exceeded || out.stats.nodes > options.node_budget) {
      out.kind = SearchResult::budget_exceeded;
      break;
    }
    if (r.kind == SearchResult::witness_found) {
      out.kind = SearchResult::witness_found;
      out.witness = coloring_from(spec, k, r.witness);
      break;
    }
  }
  out.stats.elapsed_ms = ms_since(start);
  return out;
}

}  // namespace c4r
