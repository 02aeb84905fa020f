#include <sstream>

#include "c4ramsey/construct.hpp"
#include "c4ramsey/detector.hpp"
#include "c4ramsey/search.hpp"

namespace c4r {

const char* to_string(LowerEvidence e) {
  switch (e) {
    case LowerEvidence::vacuous: return "vacuous";
    case LowerEvidence::construction: return "construction";
    case LowerEvidence::exhaustive_witness: return "exhaustive_witness";
    case LowerEvidence::local_witness: return "local_witness";
    case LowerEvidence::refuted: return "refuted";
    case LowerEvidence::not_established: return "not_established";
  }
  return "?";
}

const char* to_string(UpperEvidence e) {
  switch (e) {
    case UpperEvidence::exhaustive_none: return "exhaustive_none";
    case UpperEvidence::counting_bound: return "counting_bound";
    case UpperEvidence::refuted: return "refuted";
    case UpperEvidence::not_established: return "not_established";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

void add_stats(SearchStats& into, const SearchStats& from) {
  into.nodes += from.nodes;
  into.prunes += from.prunes;
  into.elapsed_ms += from.elapsed_ms;
}

void establish_lower(ExactValueReport& report, const VerifyBudgets& budgets,
                     const Coloring* construction) {
  if (report.claimed == 1) {
    report.lower = LowerEvidence::vacuous;
    return;
  }
  const PartitionSpec below{report.p, report.claimed - 1};

  std::optional<Coloring> bundled;
  if (!construction && below == kFig1Layout && report.k == kFig1Colors) {
    bundled = fig1_coloring();
    construction = &*bundled;
  }
  if (construction) {
    if (construction->spec() != below || construction->colors() != report.k)
      throw std::invalid_argument("construction does not match K_{value-1}^p with k colors");
    if (!construction->is_complete() || find_mono_c4(*construction))
      throw std::invalid_argument("construction is not a complete C4-free coloring");
    report.lower = LowerEvidence::construction;
    report.lower_witness = *construction;
    return;
  }

  if (below.edge_count() <= budgets.exhaustive_edge_limit) {
    const SearchOutcome outcome = exhaustive_search(below, report.k, budgets.exhaustive);
    add_stats(report.lower_stats, outcome.stats);
    if (outcome.kind == SearchResult::witness_found) {
      report.lower = LowerEvidence::exhaustive_witness;
      report.lower_witness = outcome.witness;
      return;
    }
    if (outcome.kind == SearchResult::exhausted_none) {
      report.lower = LowerEvidence::refuted;
      return;
    }
  }

  const LocalSearchOutcome local = local_search_run(below, report.k, budgets.local);
  report.lower_stats.elapsed_ms += local.elapsed_ms;
  report.seed = budgets.local.seed;
  if (local.coloring) {
    report.lower = LowerEvidence::local_witness;
    report.lower_witness = local.coloring;
  }
}

void establish_upper(ExactValueReport& report, const VerifyBudgets& budgets) {
  const PartitionSpec at{report.p, report.claimed};
  if (at.edge_count() <= budgets.exhaustive_edge_limit) {
    const SearchOutcome outcome = exhaustive_search(at, report.k, budgets.exhaustive);
    add_stats(report.upper_stats, outcome.stats);
    if (outcome.kind == SearchResult::exhausted_none) {
      report.upper = UpperEvidence::exhaustive_none;
      return;
    }
    if (outcome.kind == SearchResult::witness_found) {
      report.upper = UpperEvidence::refuted;
      return;
    }
  }
  if (report.k >= 2) {
    report.bound = bound_params(report.p, report.k, report.claimed);
    if (bound_holds(*report.bound, Inequality::strict)) report.upper = UpperEvidence::counting_bound;
  }
}

}  // namespace

ExactValueReport verify_exact_value(int p, int k, int claimed, const VerifyBudgets& budgets,
                                    const Coloring* construction) {
  if (claimed < 1) throw std::invalid_argument("claimed value must be at least 1");
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  if (k < 1 || k > kMaxColors) throw std::invalid_argument("color count must be in [1, 255]");
  ExactValueReport report;
  report.p = p;
  report.k = k;
  report.claimed = claimed;
  establish_lower(report, budgets, construction);
  establish_upper(report, budgets);

  const bool lower_ok = report.lower != LowerEvidence::refuted &&
                        report.lower != LowerEvidence::not_established;
  const bool upper_ok = report.upper == UpperEvidence::exhaustive_none ||
                        report.upper == UpperEvidence::counting_bound;
  if (report.lower == LowerEvidence::refuted || report.upper == UpperEvidence::refuted)
    report.verdict = Verdict::refuted;
  else if (lower_ok && upper_ok)
    report.verdict = Verdict::confirmed;
  else
    report.verdict = Verdict::inconclusive;
  return report;
}

std::string format_report(const ExactValueReport& r, bool with_timing) {
  std::ostringstream os;
  os << "verdict=" << to_string(r.verdict) << '\n'
     << "p=" << r.p << '\n'
     << "k=" << r.k << '\n'
     << "value=" << r.claimed << '\n'
     << "lower=" << to_string(r.lower) << '\n'
     << "upper=" << to_string(r.upper) << '\n';
  if (r.bound) os << "bound_lhs=" << r.bound->lhs << '\n' << "bound_rhs=" << r.bound->rhs << '\n';
  os << "nodes=" << r.lower_stats.nodes + r.upper_stats.nodes << '\n'
     << "prunes=" << r.lower_stats.prunes + r.upper_stats.prunes << '\n'
     << "seed=" << r.seed << '\n';
  if (with_timing)
    os << "elapsed_ms="
       << static_cast<long long>(r.lower_stats.elapsed_ms + r.upper_stats.elapsed_ms) << '\n';
  return os.str();
}

}  // namespace c4r
