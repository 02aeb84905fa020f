#include "c4ramsey/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "c4ramsey/bounds.hpp"
#include "c4ramsey/construct.hpp"
#include "c4ramsey/detector.hpp"
#include "c4ramsey/search.hpp"

namespace c4r::cli {

namespace {

struct BoundsArgs {
  int p = 0;
  int k = 0;
  std::int64_t cap = 0;
  bool tsv = false;
  bool strict = false;
};

struct FileArgs {
  std::string path;
};

struct ConstructArgs {
  std::string source;
  std::string output;
  int p = 0;
  bool allow_bad = false;
};

struct SearchArgs {
  int p = 0;
  int n = 0;
  int k = 0;
  std::string mode = "exhaustive";
  std::uint64_t budget = 1'000'000'000ULL;
  std::uint64_t seed = 1;
  std::uint64_t steps = 1'000'000;
  int restarts = 20;
  bool no_symmetry = false;
  std::string output;
};

struct ConfirmArgs {
  int p = 0;
  int k = 0;
  int value = 0;
  std::string construction;
  std::uint64_t budget = 1'000'000'000ULL;
  std::int64_t edge_limit = 32;
  std::uint64_t seed = 1;
  std::uint64_t steps = 1'000'000;
  int restarts = 20;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out, std::ostream& err) {
  const Inequality mode = a.strict ? Inequality::strict : Inequality::published;
  auto cap_for = [&](int k) { return a.cap > 0 ? a.cap : 4LL * k * k; };
  if ((a.p == 0) != (a.k == 0)) {
    err << "bounds: give both --p and --k, or neither for the full table\n";
    return kUsage;
  }
  if (a.p != 0) {
    const auto n = smallest_bound(a.p, a.k, cap_for(a.k), mode);
    if (!n) {
      out << "none\n";
      err << "no n <= " << cap_for(a.k) << " satisfies the bound\n";
      return kNegative;
    }
    out << *n << '\n';
    return kOk;
  }

  constexpr int kMinP = 2, kMaxP = 6, kMinK = 2, kMaxK = 10;
  if (a.tsv) {
    out << "k\tp\tbound\n";
    for (int k = kMinK; k <= kMaxK; ++k)
      for (int p = kMinP; p <= kMaxP; ++p) {
        const auto n = smallest_bound(p, k, cap_for(k), mode);
        out << k << '\t' << p << '\t' << (n ? std::to_string(*n) : "none") << '\n';
      }
    return kOk;
  }
  out << std::left << std::setw(8) << "k \\ p";
  for (int p = kMinP; p <= kMaxP; ++p) out << std::right << std::setw(6) << p;
  out << '\n';
  for (int k = kMinK; k <= kMaxK; ++k) {
    out << std::left << std::setw(8) << k;
    for (int p = kMinP; p <= kMaxP; ++p) {
      const auto n = smallest_bound(p, k, cap_for(k), mode);
      out << std::right << std::setw(6) << (n ? std::to_string(*n) : "-");
    }
    out << '\n';
  }
  return kOk;
}

int report_parse_error(const std::string& path, const ParseError& e, std::ostream& err) {
  err << path << ": " << e.what() << '\n';
  return kUsage;
}

int cmd_verify(const FileArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const Coloring c = load_coloring(a.path);
    if (const auto w = find_mono_c4(c)) {
      out << "MONO-C4 " << to_string(*w) << '\n';
      return kNegative;
    }
    out << "C4-FREE\n";
    return kOk;
  } catch (const ParseError& e) {
    return report_parse_error(a.path, e, err);
  }
}

int cmd_count(const FileArgs& a, std::ostream& out, std::ostream& err) {
  try {
    out << count_mono_c4(load_coloring(a.path)) << '\n';
    return kOk;
  } catch (const ParseError& e) {
    return report_parse_error(a.path, e, err);
  }
}

// Writes to `path`, or to `out` when path is empty or "-".
void emit(const Coloring& c, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    write_coloring(out, c);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  write_coloring(file, c);
  if (!file) throw std::runtime_error("write failed: " + path);
}

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<Coloring> built;
  if (a.source == "fig1") {
    built = fig1_coloring();
  } else {
    BlockSpec blocks;
    try {
      blocks = load_block_spec(a.source);
    } catch (const ParseError& e) {
      return report_parse_error(a.source, e, err);
    }
    if (a.p == 0) {
      err << "construct: --p is required with a first-rows file\n";
      return kUsage;
    }
    const int vertices = blocks.block_rows * blocks.block_size;
    if (vertices % a.p != 0) {
      err << "construct: " << vertices << " vertices do not split into " << a.p << " parts\n";
      return kUsage;
    }
    built = build_from_blocks(blocks, PartitionSpec{a.p, vertices / a.p}, blocks.colors);
  }

  if (const auto w = find_mono_c4(*built)) {
    if (!a.allow_bad) {
      err << "construct: refusing to write, coloring has MONO-C4 " << to_string(*w) << '\n';
      return kNegative;
    }
    err << "construct: warning, coloring has MONO-C4 " << to_string(*w) << '\n';
  }
  emit(*built, a.output, out);
  return kOk;
}

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  const PartitionSpec spec{a.p, a.n};
  validate(spec);
  std::optional<Coloring> witness;
  int code = kOk;
  if (a.mode == "exhaustive") {
    ExhaustiveOptions options;
    options.node_budget = a.budget;
    options.break_color_symmetry = !a.no_symmetry;
    const SearchOutcome outcome = exhaustive_search(spec, a.k, options);
    err << "verdict=" << to_string(outcome.kind) << '\n'
        << "nodes=" << outcome.stats.nodes << '\n'
        << "prunes=" << outcome.stats.prunes << '\n'
        << "seed=" << a.seed << '\n'
        << "elapsed_ms=" << static_cast<long long>(outcome.stats.elapsed_ms) << '\n';
    witness = outcome.witness;
    if (outcome.kind == SearchResult::exhausted_none) code = kNegative;
    if (outcome.kind == SearchResult::budget_exceeded) code = kBudget;
  } else {
    LocalSearchOptions options;
    options.seed = a.seed;
    options.max_steps = a.steps;
    options.restarts = a.restarts;
    const LocalSearchOutcome outcome = local_search_run(spec, a.k, options);
    err << "verdict=" << (outcome.coloring ? "witness_found" : "budget_exceeded") << '\n'
        << "restart=" << outcome.restart << '\n'
        << "steps=" << outcome.steps << '\n'
        << "seed=" << a.seed << '\n'
        << "elapsed_ms=" << static_cast<long long>(outcome.elapsed_ms) << '\n';
    witness = outcome.coloring;
    if (!witness) code = kBudget;
  }
  if (witness) {
    // Never emit an unverified witness.
    if (!witness->is_complete() || find_mono_c4(*witness))
      throw std::logic_error("search produced an invalid witness");
    emit(*witness, a.output, out);
  }
  return code;
}

int cmd_confirm(const ConfirmArgs& a, std::ostream& out, std::ostream& err) {
  VerifyBudgets budgets;
  budgets.exhaustive.node_budget = a.budget;
  budgets.exhaustive_edge_limit = a.edge_limit;
  budgets.local.seed = a.seed;
  budgets.local.max_steps = a.steps;
  budgets.local.restarts = a.restarts;
  std::optional<Coloring> construction;
  if (!a.construction.empty()) {
    try {
      construction = load_coloring(a.construction);
    } catch (const ParseError& e) {
      return report_parse_error(a.construction, e, err);
    }
  }
  const ExactValueReport report =
      verify_exact_value(a.p, a.k, a.value, budgets, construction ? &*construction : nullptr);
  out << format_report(report, false);
  err << "elapsed_ms="
      << static_cast<long long>(report.lower_stats.elapsed_ms + report.upper_stats.elapsed_ms)
      << '\n';
  switch (report.verdict) {
    case Verdict::confirmed: return kOk;
    case Verdict::refuted: return kNegative;
    case Verdict::inconclusive: return kBudget;
  }
  return kBudget;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multipartite Ramsey numbers for the quadrilateral C4", "c4ramsey"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = OpenMP default; else QR_THREADS)")
      ->check(CLI::NonNegativeNumber);
  app.fallthrough();

  const auto part_count = CLI::Range(2, 1 << 15);
  const auto color_count = CLI::Range(1, kMaxColors);

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Counting upper bounds on r_p(C4,k)");
  bounds_cmd->add_option("--p", bounds.p, "Number of parts")->check(part_count);
  bounds_cmd->add_option("--k", bounds.k, "Number of colors")->check(CLI::Range(2, kMaxColors));
  bounds_cmd->add_option("--cap", bounds.cap, "Largest n to try (default 4k^2)")
      ->check(CLI::PositiveNumber);
  bounds_cmd->add_flag("--tsv", bounds.tsv, "Tab-separated table");
  bounds_cmd->add_flag("--strict", bounds.strict, "Require lhs > rhs (default accepts equality)");

  FileArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring file for monochromatic C4s");
  verify_cmd->add_option("path", verify.path, "Coloring file")->required();

  FileArgs count;
  auto* count_cmd = app.add_subcommand("count", "Count monochromatic C4s in a coloring file");
  count_cmd->add_option("path", count.path, "Coloring file")->required();

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Expand a circulant block construction");
  construct_cmd->add_option("source", construct.source, "'fig1' or a first-rows file")->required();
  construct_cmd->add_option("-o,--output", construct.output, "Output file (default stdout)");
  construct_cmd->add_option("--p", construct.p, "Number of parts (first-rows files)")
      ->check(part_count);
  construct_cmd->add_flag("--allow-bad", construct.allow_bad,
                          "Write even if a monochromatic C4 exists");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Search for a C4-free coloring");
  search_cmd->add_option("--p", search.p, "Number of parts")->required()->check(part_count);
  search_cmd->add_option("--n", search.n, "Vertices per part")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--k", search.k, "Number of colors")->required()->check(color_count);
  search_cmd->add_option("--mode", search.mode, "exhaustive or local")
      ->check(CLI::IsMember({"exhaustive", "local"}));
  search_cmd->add_option("--budget", search.budget, "Exhaustive node budget")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--seed", search.seed, "Local search seed");
  search_cmd->add_option("--steps", search.steps, "Local search steps per restart")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--restarts", search.restarts, "Local search restarts")
      ->check(CLI::PositiveNumber);
  search_cmd->add_flag("--no-symmetry", search.no_symmetry, "Disable color-permutation pruning");
  search_cmd->add_option("-o,--output", search.output, "Witness file (default stdout)");

  ConfirmArgs confirm;
  auto* confirm_cmd = app.add_subcommand("confirm", "Verify an exact value of r_p(C4,k)");
  confirm_cmd->add_option("--p", confirm.p, "Number of parts")->required()->check(part_count);
  confirm_cmd->add_option("--k", confirm.k, "Number of colors")->required()->check(color_count);
  confirm_cmd->add_option("--value", confirm.value, "Claimed value")->required()
      ->check(CLI::PositiveNumber);
  confirm_cmd->add_option("--construction", confirm.construction,
                          "C4-free coloring at n = value - 1");
  confirm_cmd->add_option("--budget", confirm.budget, "Exhaustive node budget")
      ->check(CLI::PositiveNumber);
  confirm_cmd->add_option("--edge-limit", confirm.edge_limit,
                          "Largest edge count attempted exhaustively")
      ->check(CLI::NonNegativeNumber);
  confirm_cmd->add_option("--seed", confirm.seed, "Local search seed");
  confirm_cmd->add_option("--steps", confirm.steps, "Local search steps per restart")
      ->check(CLI::PositiveNumber);
  confirm_cmd->add_option("--restarts", confirm.restarts, "Local search restarts")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (app.count("--threads") == 0) {
    if (const char* env = std::getenv("QR_THREADS"); env != nullptr && *env != '\0') {
      const std::string_view text(env);
      const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), threads);
      if (ec != std::errc() || end != text.data() + text.size() || threads < 0) {
        err << "QR_THREADS must be a nonnegative integer, got '" << text << "'\n";
        return kUsage;
      }
    }
  }
  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (bounds_cmd->parsed()) return cmd_bounds(bounds, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
    if (count_cmd->parsed()) return cmd_count(count, out, err);
    if (construct_cmd->parsed()) return cmd_construct(construct, out, err);
    if (search_cmd->parsed()) return cmd_search(search, out, err);
    if (confirm_cmd->parsed()) return cmd_confirm(confirm, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace c4r::cli
