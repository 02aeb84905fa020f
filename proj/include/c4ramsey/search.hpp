#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "c4ramsey/bounds.hpp"
#include "c4ramsey/core.hpp"

namespace c4r {

enum class SearchResult { witness_found, exhausted_none, budget_exceeded };

const char* to_string(SearchResult r);

struct SearchStats {
  // Edge assignments accepted / rejected because they closed a monochromatic C4.
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  double elapsed_ms = 0.0;
};

struct SearchOutcome {
  SearchResult kind = SearchResult::budget_exceeded;
  std::optional<Coloring> witness;  // set iff kind == witness_found
  SearchStats stats;
};

struct ExhaustiveOptions {
  std::uint64_t node_budget = 1'000'000'000ULL;
  // First-use color ordering: edge e may take color c only if c - 1 already
  // appears on an earlier edge. Loses nothing up to color permutation.
  bool break_color_symmetry = true;
};

// Depth-first search over edges in edge_index order, colors ascending,
// cutting every branch whose last assignment closes a monochromatic C4.
// Subtrees below a fixed frontier are searched in parallel; the outcome,
// the witness (lexicographically least) and the counters are independent of
// the thread count.
SearchOutcome exhaustive_search(const PartitionSpec& spec, int k, const ExhaustiveOptions& options = {});

namespace reference {

// Plain recursive version of the same search, single-threaded.
SearchOutcome exhaustive_search_serial(const PartitionSpec& spec, int k,
                                       const ExhaustiveOptions& options = {});

}  // namespace reference

struct LocalSearchOptions {
  std::uint64_t seed = 1;
  std::uint64_t max_steps = 1'000'000;
  int restarts = 20;
};

struct LocalSearchOutcome {
  std::optional<Coloring> coloring;  // C4-free when set
  int restart = -1;                  // index of the successful restart
  std::uint64_t steps = 0;           // steps taken by that restart
  double elapsed_ms = 0.0;
};

// Min-conflicts: from a seeded random coloring, repeatedly pick a
// monochromatic C4 uniformly at random, pick one of its four edges uniformly,
// and move that edge to the other color creating the fewest monochromatic
// C4s (lowest color on ties). Restart r is seeded from (seed, r); the
// lowest-index successful restart wins, so results do not depend on threads.
LocalSearchOutcome local_search_run(const PartitionSpec& spec, int k,
                                    const LocalSearchOptions& options = {});
std::optional<Coloring> local_search(const PartitionSpec& spec, int k,
                                     const LocalSearchOptions& options = {});

// --- exact value verification ----------------------------------------------

enum class LowerEvidence {
  vacuous,             // claimed value 1: nothing to exhibit
  construction,        // supplied or bundled C4-free coloring at n = value - 1
  exhaustive_witness,
  local_witness,
  refuted,             // exhaustive search proved no coloring exists at value - 1
  not_established,
};

enum class UpperEvidence {
  exhaustive_none,  // every coloring at n = value has a monochromatic C4
  counting_bound,   // bound_holds(p, k, value) with the strict comparison
  refuted,          // a C4-free coloring exists at n = value
  not_established,
};

enum class Verdict { confirmed, refuted, inconclusive };

const char* to_string(LowerEvidence e);
const char* to_string(UpperEvidence e);
const char* to_string(Verdict v);

struct VerifyBudgets {
  ExhaustiveOptions exhaustive;
  // Exhaustive search is only attempted on instances with at most this many edges.
  std::int64_t exhaustive_edge_limit = 32;
  LocalSearchOptions local;
};

struct ExactValueReport {
  int p = 0;
  int k = 0;
  int claimed = 0;
  LowerEvidence lower = LowerEvidence::not_established;
  UpperEvidence upper = UpperEvidence::not_established;
  Verdict verdict = Verdict::inconclusive;
  std::optional<Coloring> lower_witness;
  std::optional<BoundParams> bound;  // set when the counting bound was evaluated
  SearchStats lower_stats;
  SearchStats upper_stats;
  std::uint64_t seed = 0;
};

// Checks r_p(C4, k) == claimed: a C4-free coloring at n = claimed - 1 and a
// proof that none exists at n = claimed. `construction`, when given, must be a
// complete C4-free coloring of K_{claimed-1}^p with k colors; otherwise the
// bundled K_10^3 coloring is used for (3, 4, 11). Throws std::invalid_argument
// for an unusable construction.
ExactValueReport verify_exact_value(int p, int k, int claimed, const VerifyBudgets& budgets = {},
                                    const Coloring* construction = nullptr);

// key=value lines; elapsed_ms last and only when `with_timing`.
std::string format_report(const ExactValueReport& report, bool with_timing = true);

}  // namespace c4r
