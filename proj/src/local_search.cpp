#include <atomic>
#include <chrono>
#include <limits>
#include <random>

#include "c4ramsey/detector.hpp"
#include "c4ramsey/search.hpp"

namespace c4r {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Plain modulo keeps the stream identical across standard libraries.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

class MinConflicts {
 public:
  MinConflicts(const EdgeIndex& index, int k)
      : index_(index), k_(k), n_(index.spec().vertex_count()), adj_(n_, k) {}

  // Returns true on reaching zero monochromatic C4s.
  bool run(std::uint64_t seed, std::uint64_t max_steps, std::uint64_t& steps) {
    std::mt19937_64 rng(seed);
    colors_.assign(static_cast<std::size_t>(index_.size()), 0);
    adj_ = ColorAdjacency(n_, k_);
    for (EdgeId e = 0; e < index_.size(); ++e) {
      const auto [u, v] = index_.endpoints(e);
      const int c = static_cast<int>(below(rng, static_cast<std::uint64_t>(k_))) + 1;
      colors_[e] = static_cast<Color>(c);
      adj_.add(c, u, v);
    }
    total_ = count_all();
    for (steps = 0; total_ > 0; ++steps) {
      if (steps == max_steps || k_ == 1) return false;
      step(rng);
    }
    return true;
  }

  const std::vector<Color>& colors() const { return colors_; }

 private:
  // Each cycle once: as x-a-y-b with x its smallest vertex, {x, y} and {a, b}
  // its diagonals, a < b.
  std::uint64_t canonical_in_pair(int color, Vertex x, Vertex y) const {
    const auto nx = adj_.row(color, x);
    const auto ny = adj_.row(color, y);
    std::uint64_t m = 0;
    for (int w = 0; w < adj_.words(); ++w) m += std::popcount(above(nx[w] & ny[w], w, x));
    return m * (m - (m > 0)) / 2;
  }

  static ColorAdjacency::Word above(ColorAdjacency::Word bits, int word, Vertex x) {
    const int base = word * 64;
    if (x < base) return bits;
    if (x >= base + 63) return 0;
    return bits & (~ColorAdjacency::Word{0} << (x - base + 1));
  }

  std::uint64_t count_all() const {
    std::uint64_t total = 0;
    for (int c = 1; c <= k_; ++c)
      for (Vertex x = 0; x < n_; ++x)
        for (Vertex y = x + 1; y < n_; ++y) total += canonical_in_pair(c, x, y);
    return total;
  }

  void step(std::mt19937_64& rng) {
    std::uint64_t pick = below(rng, total_);
    for (int c = 1; c <= k_; ++c) {
      for (Vertex x = 0; x < n_; ++x) {
        for (Vertex y = x + 1; y < n_; ++y) {
          const std::uint64_t here = canonical_in_pair(c, x, y);
          if (pick >= here) {
            pick -= here;
            continue;
          }
          std::vector<Vertex> common;
          const auto nx = adj_.row(c, x);
          const auto ny = adj_.row(c, y);
          for (int w = 0; w < adj_.words(); ++w) {
            auto bits = above(nx[w] & ny[w], w, x);
            while (bits != 0) {
              common.push_back(w * 64 + std::countr_zero(bits));
              bits &= bits - 1;
            }
          }
          for (std::size_t i = 0; i < common.size(); ++i) {
            const std::uint64_t with_i = common.size() - i - 1;
            if (pick >= with_i) {
              pick -= with_i;
              continue;
            }
            const Vertex a = common[i];
            const Vertex b = common[i + 1 + pick];
            const std::array<std::pair<Vertex, Vertex>, 4> edges{
                {{x, a}, {a, y}, {y, b}, {b, x}}};
            const auto [u, v] = edges[below(rng, 4)];
            recolor(u, v, c);
            return;
          }
        }
      }
    }
  }

  void recolor(Vertex u, Vertex v, int current) {
    total_ -= cycles_through_edge(adj_, u, v, current);
    adj_.remove(current, u, v);
    int best = 0;
    std::uint64_t best_cost = std::numeric_limits<std::uint64_t>::max();
    for (int c = 1; c <= k_; ++c) {
      if (c == current) continue;
      const std::uint64_t cost = cycles_through_edge(adj_, u, v, c);
      if (cost < best_cost) {
        best = c;
        best_cost = cost;
      }
    }
    total_ += best_cost;
    adj_.add(best, u, v);
    colors_[index_.at(u, v)] = static_cast<Color>(best);
  }

  const EdgeIndex& index_;
  int k_;
  int n_;
  ColorAdjacency adj_;
  std::vector<Color> colors_;
  std::uint64_t total_ = 0;
};

}  // namespace

LocalSearchOutcome local_search_run(const PartitionSpec& spec, int k,
                                    const LocalSearchOptions& options) {
  if (k < 1 || k > kMaxColors) throw std::invalid_argument("color count must be in [1, 255]");
  if (options.restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  const EdgeIndex index(spec);
  const int restarts = options.restarts;

  std::vector<std::optional<std::vector<Color>>> found(static_cast<std::size_t>(restarts));
  std::vector<std::uint64_t> steps(static_cast<std::size_t>(restarts), 0);
  std::atomic<int> best{std::numeric_limits<int>::max()};

#pragma omp parallel for schedule(dynamic, 1)
  for (int r = 0; r < restarts; ++r) {
    if (best.load(std::memory_order_relaxed) < r) continue;
    MinConflicts search(index, k);
    const std::uint64_t seed = splitmix64(options.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(r));
    if (search.run(seed, options.max_steps, steps[r])) {
      found[r] = search.colors();
      int seen = best.load();
      while (r < seen && !best.compare_exchange_weak(seen, r)) {
      }
    }
  }

  LocalSearchOutcome out;
  for (int r = 0; r < restarts; ++r) {
    if (!found[r]) continue;
    Coloring c(spec, k);
    for (std::size_t e = 0; e < found[r]->size(); ++e)
      c.set_edge_color(static_cast<EdgeId>(e), (*found[r])[e]);
    out.coloring = std::move(c);
    out.restart = r;
    out.steps = steps[r];
    break;
  }
  out.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::optional<Coloring> local_search(const PartitionSpec& spec, int k,
                                     const LocalSearchOptions& options) {
  return local_search_run(spec, k, options).coloring;
}

}  // namespace c4r
