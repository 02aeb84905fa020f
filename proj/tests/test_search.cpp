#include <doctest.h>

#include <omp.h>

#include "c4ramsey/construct.hpp"
#include "c4ramsey/detector.hpp"
#include "c4ramsey/search.hpp"

using namespace c4r;

namespace {

void check_witness(const SearchOutcome& out, const PartitionSpec& spec) {
  REQUIRE(out.witness.has_value());
  CHECK(out.witness->spec() == spec);
  CHECK(out.witness->is_complete());
  CHECK(count_mono_c4(*out.witness) == 0);
}

}  // namespace

TEST_CASE("exhaustive search small outcomes") {
  const auto none = exhaustive_search({2, 2}, 1);
  CHECK(none.kind == SearchResult::exhausted_none);
  CHECK_FALSE(none.witness.has_value());

  const auto k22 = exhaustive_search({2, 2}, 2);
  CHECK(k22.kind == SearchResult::witness_found);
  check_witness(k22, {2, 2});

  const auto k44 = exhaustive_search({2, 4}, 2);
  CHECK(k44.kind == SearchResult::witness_found);
  check_witness(k44, {2, 4});

  CHECK(exhaustive_search({2, 1}, 1).kind == SearchResult::witness_found);
  CHECK_THROWS_AS(exhaustive_search({2, 2}, 0), std::invalid_argument);
}

TEST_CASE("parallel search matches the serial reference") {
  for (const auto& [spec, k] : std::vector<std::pair<PartitionSpec, int>>{
           {{2, 2}, 2}, {{2, 3}, 2}, {{2, 4}, 2}, {{3, 2}, 2}, {{4, 1}, 2}, {{6, 1}, 2},
           {{3, 2}, 3}, {{2, 3}, 1}}) {
    for (const bool sym : {true, false}) {
      CAPTURE(spec.parts);
      CAPTURE(spec.part_size);
      CAPTURE(k);
      CAPTURE(sym);
      ExhaustiveOptions opt;
      opt.break_color_symmetry = sym;
      const auto par = exhaustive_search(spec, k, opt);
      const auto ser = reference::exhaustive_search_serial(spec, k, opt);
      CHECK(par.kind == ser.kind);
      CHECK(par.witness == ser.witness);
      if (par.kind == SearchResult::exhausted_none) {
        CHECK(par.stats.nodes == ser.stats.nodes);
        CHECK(par.stats.prunes == ser.stats.prunes);
      }
    }
  }
}

TEST_CASE("symmetry breaking does not change existence") {
  // K_5 with two colors avoids monochromatic C4, K_6 does not.
  for (const auto& [spec, k] : std::vector<std::pair<PartitionSpec, int>>{
           {{2, 2}, 2}, {{3, 1}, 2}, {{4, 1}, 2}, {{5, 1}, 2}, {{6, 1}, 2}, {{3, 2}, 2}}) {
    ExhaustiveOptions plain;
    plain.break_color_symmetry = false;
    CHECK(exhaustive_search(spec, k).kind == exhaustive_search(spec, k, plain).kind);
  }
  CHECK(exhaustive_search({5, 1}, 2).kind == SearchResult::witness_found);
  CHECK(exhaustive_search({6, 1}, 2).kind == SearchResult::exhausted_none);
}

TEST_CASE("node budget") {
  ExhaustiveOptions opt;
  opt.node_budget = 5;
  const auto out = exhaustive_search({3, 3}, 2, opt);
  CHECK(out.kind == SearchResult::budget_exceeded);
  CHECK_FALSE(out.witness.has_value());
  CHECK(reference::exhaustive_search_serial({3, 3}, 2, opt).kind == SearchResult::budget_exceeded);
}

TEST_CASE("exhaustive search is independent of the thread count") {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = exhaustive_search({2, 4}, 2);
  const auto none_one = exhaustive_search({3, 2}, 2);
  omp_set_num_threads(4);
  const auto four = exhaustive_search({2, 4}, 2);
  const auto none_four = exhaustive_search({3, 2}, 2);
  omp_set_num_threads(saved);
  CHECK(one.kind == four.kind);
  CHECK(one.witness == four.witness);
  CHECK(none_one.kind == none_four.kind);
  CHECK(none_one.stats.nodes == none_four.stats.nodes);
}

TEST_CASE("local search finds small witnesses deterministically") {
  LocalSearchOptions opt;
  opt.seed = 42;
  const auto a = local_search_run({2, 4}, 2, opt);
  REQUIRE(a.coloring.has_value());
  CHECK(count_mono_c4(*a.coloring) == 0);
  const auto b = local_search_run({2, 4}, 2, opt);
  CHECK(a.coloring == b.coloring);
  CHECK(a.restart == b.restart);
  CHECK(a.steps == b.steps);

  const auto tri = local_search({3, 2}, 3, opt);
  REQUIRE(tri.has_value());
  CHECK(count_mono_c4(*tri) == 0);

  const int saved = omp_get_max_threads();
  omp_set_num_threads(3);
  const auto c = local_search_run({2, 4}, 2, opt);
  omp_set_num_threads(saved);
  CHECK(a.coloring == c.coloring);

  // No C4-free 2-coloring of K_{5,5} exists.
  LocalSearchOptions small;
  small.max_steps = 2000;
  small.restarts = 2;
  CHECK_FALSE(local_search({2, 5}, 2, small).has_value());
}

TEST_CASE("verify_exact_value") {
  const auto r3 = verify_exact_value(3, 4, 11);
  CHECK(r3.verdict == Verdict::confirmed);
  CHECK(r3.lower == LowerEvidence::construction);
  CHECK(r3.upper == UpperEvidence::counting_bound);
  REQUIRE(r3.bound.has_value());
  CHECK(r3.bound->lhs == 56);
  CHECK(r3.bound->rhs == 55);
  CHECK(*r3.lower_witness == fig1_coloring());

  const auto tiny = verify_exact_value(3, 2, 3);
  CHECK(tiny.verdict == Verdict::confirmed);
  CHECK(tiny.lower == LowerEvidence::exhaustive_witness);
  CHECK(tiny.upper == UpperEvidence::exhaustive_none);

  CHECK(verify_exact_value(6, 2, 1).verdict == Verdict::confirmed);
  CHECK(verify_exact_value(6, 2, 1).lower == LowerEvidence::vacuous);

  // r_2(C4,2) is 5: 4 has too small an upper side, 6 has no witness below.
  const auto low = verify_exact_value(2, 2, 4);
  CHECK(low.verdict == Verdict::refuted);
  CHECK(low.upper == UpperEvidence::refuted);
  const auto high = verify_exact_value(2, 2, 6, VerifyBudgets{{}, 25, {}});
  CHECK(high.verdict == Verdict::refuted);
  CHECK(high.lower == LowerEvidence::refuted);

  // Bundled coloring offered for the wrong shape.
  const Coloring fig = fig1_coloring();
  CHECK_THROWS_AS(verify_exact_value(3, 4, 10, {}, &fig), std::invalid_argument);
  CHECK_THROWS_AS(verify_exact_value(3, 3, 11, {}, &fig), std::invalid_argument);

  const std::string text = format_report(r3, false);
  CHECK(text.find("verdict=confirmed\n") == 0);
  CHECK(text.find("bound_lhs=56\n") != std::string::npos);
  CHECK(text.find("elapsed_ms") == std::string::npos);
}
