#include <doctest.h>

#include <algorithm>
#include <array>

#include "c4ramsey/bounds.hpp"
#include "oracles.hpp"

using namespace c4r;

namespace {

// Published table of upper bounds, rows k = 2..10, columns p = 2..6.
constexpr std::array<std::array<int, 5>, 9> kTable{{
    {5, 3, 3, 3, 3},
    {11, 7, 5, 4, 4},
    {19, 11, 9, 7, 6},
    {29, 17, 12, 11, 9},
    {41, 23, 17, 14, 13},
    {55, 31, 23, 18, 16},
    {71, 39, 28, 23, 20},
    {89, 49, 35, 29, 24},
    {109, 59, 43, 34, 29},
}};

int table(int p, int k) { return kTable[k - 2][p - 2]; }

}  // namespace

TEST_CASE("min_pair_sum examples") {
  CHECK(min_pair_sum(7, 3) == 5);
  CHECK(min_pair_sum(0, 5) == 0);
  CHECK(min_pair_sum(6, 3) == 3);
  CHECK_THROWS_AS(min_pair_sum(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(min_pair_sum(-1, 2), std::invalid_argument);
}

TEST_CASE("min_pair_sum equals brute-force minimization") {
  int cases = 0;
  for (int total = 0; total <= 30; ++total) {
    for (int m = 1; m <= 8; ++m) {
      CAPTURE(total);
      CAPTURE(m);
      CHECK(min_pair_sum(total, m) == oracle::brute_min_pair_sum(total, m));
      ++cases;
    }
  }
  CHECK(cases == 248);
}

TEST_CASE("bound_params at r_3(C4,4)") {
  const BoundParams at11 = bound_params(3, 4, 11);
  CHECK(at11.edge_total == 363);
  CHECK(at11.per_color_min == 91);
  CHECK(at11.w == 61);
  CHECK(at11.a == 2);
  CHECK(at11.r == 17);
  CHECK(at11.lhs == 56);
  CHECK(at11.rhs == 55);
  CHECK(at11.w == at11.a * (at11.p - 1) * at11.n + at11.r);
  CHECK(bound_holds(at11));

  const BoundParams at10 = bound_params(3, 4, 10);
  CHECK(at10.lhs <= at10.rhs);
  CHECK_FALSE(bound_holds(at10));
  CHECK_FALSE(bound_holds(at10, Inequality::published));

  CHECK(bound_holds(2, 2, 5));
  CHECK(bound_holds(2, 3, 11));
  CHECK_THROWS_AS(bound_params(1, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(bound_params(3, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(bound_params(3, 3, 0), std::invalid_argument);
}

TEST_CASE("closed-form intermediate values for the tripartite bound") {
  // Even k: per_color_min = 3k^3/4 + 3k^2 - 5, w = k^3/2 + 2k^2 - 3, a = k/2, r = k^2 + k - 3.
  // Odd k:  4*per_color_min = 3k^3 + 12k^2 + 6k - 9 - ((k-1) mod 4),
  //         2w = k^3 + 4k^2 + 2k - 3, 2a = k + 1, 2r = k^2 + k - 2.
  for (std::int64_t k = 3; k <= 40; ++k) {
    CAPTURE(k);
    const std::int64_t n = tripartite_closed_form(static_cast<int>(k));
    const BoundParams bp = bound_params(3, static_cast<int>(k), n);
    if (k % 2 == 0) {
      CHECK(4 * bp.per_color_min == 3 * k * k * k + 12 * k * k - 20);
      CHECK(2 * bp.w == k * k * k + 4 * k * k - 6);
      CHECK(2 * bp.a == k);
      CHECK(bp.r == k * k + k - 3);
    } else {
      CHECK(4 * bp.per_color_min == 3 * k * k * k + 12 * k * k + 6 * k - 9 - (k - 1) % 4);
      CHECK(2 * bp.w == k * k * k + 4 * k * k + 2 * k - 3);
      CHECK(2 * bp.a == k + 1);
      CHECK(2 * bp.r == k * k + k - 2);
    }
    CHECK(bound_holds(bp));
  }
}

TEST_CASE("smallest_bound reproduces the published table") {
  CHECK(smallest_bound(2, 10, 200) == 109);
  CHECK(smallest_bound(6, 10, 200) == 29);
  CHECK(smallest_bound(5, 3, 200) == 4);
  for (int k = 2; k <= 10; ++k)
    for (int p = 2; p <= 6; ++p) {
      CAPTURE(p);
      CAPTURE(k);
      CHECK(smallest_bound(p, k, 200) == table(p, k));
    }
  CHECK_FALSE(smallest_bound(2, 10, 108).has_value());
  CHECK_THROWS_AS(smallest_bound(2, 2, 0), std::invalid_argument);
}

TEST_CASE("strict and published comparisons differ only on equality cells") {
  // Cells where lhs == rhs at the tabulated n.
  const std::array<std::pair<int, int>, 6> equality{
      {{4, 3}, {5, 3}, {6, 4}, {4, 5}, {6, 5}, {4, 8}}};
  for (int k = 2; k <= 10; ++k) {
    for (int p = 2; p <= 6; ++p) {
      CAPTURE(p);
      CAPTURE(k);
      const auto strict = smallest_bound(p, k, 200, Inequality::strict);
      const bool is_equality_cell =
          std::find(equality.begin(), equality.end(), std::pair{p, k}) != equality.end();
      if (is_equality_cell) {
        const BoundParams bp = bound_params(p, k, table(p, k));
        CHECK(bp.lhs == bp.rhs);
        CHECK(strict == table(p, k) + 1);
      } else {
        CHECK(strict == table(p, k));
      }
    }
  }
}

TEST_CASE("tripartite closed form") {
  CHECK(tripartite_closed_form(4) == 11);
  CHECK(tripartite_closed_form(2) == 3);
  CHECK(tripartite_closed_form(9) == 49);
  for (int k = 2; k <= 10; ++k) CHECK(tripartite_closed_form(k) == smallest_bound(3, k, 200));
  CHECK_THROWS_AS(tripartite_closed_form(1), std::invalid_argument);
}

TEST_CASE("two-color values and triviality") {
  CHECK(two_color_value(2) == 5);
  CHECK(two_color_value(3) == 3);
  CHECK(two_color_value(4) == 2);
  CHECK(two_color_value(5) == 2);
  CHECK(two_color_value(100) == 1);
  for (int p = 3; p <= 50; ++p) CHECK(two_color_value(p) <= two_color_value(p - 1));

  CHECK(is_trivial(6, 2) == true);
  CHECK(is_trivial(10, 3) == false);
  CHECK_FALSE(is_trivial(28, 5).has_value());
  CHECK(is_trivial(27, 5).has_value() == false);
  CHECK(is_trivial(26, 5) == false);
  CHECK(is_trivial(29, 5) == true);
  CHECK_FALSE(is_trivial(40, 6).has_value());

  // r_p(C4,2) == 1 exactly when p >= R_2(C4).
  for (int p = 2; p <= 60; ++p) CHECK(is_trivial(p, 2) == (two_color_value(p) == 1));
}

TEST_CASE("table bounds are consistent with known exact values and monotone") {
  for (int k = 2; k <= 4; ++k) {
    CHECK(smallest_bound(2, k, 200) >= known_bipartite_value(k).value());
    CHECK(smallest_bound(3, k, 200) >= known_tripartite_value(k).value());
  }
  for (int p = 2; p <= 6; ++p) CHECK(smallest_bound(p, 2, 200) >= two_color_value(p));
  for (int k = 2; k <= 10; ++k)
    for (int p = 3; p <= 6; ++p) CHECK(smallest_bound(p, k, 200) <= smallest_bound(p - 1, k, 200));
  for (int p = 2; p <= 6; ++p)
    for (int k = 3; k <= 10; ++k) CHECK(smallest_bound(p, k, 200) >= smallest_bound(p, k - 1, 200));
  CHECK(known_bipartite_value(5) == std::nullopt);
  CHECK(classical_c4_ramsey(4)->exact());
  CHECK_FALSE(classical_c4_ramsey(5)->exact());
}

TEST_CASE("bound arithmetic refuses to overflow") {
  CHECK(binom2(0) == 0);
  CHECK(binom2(1) == 0);
  CHECK(binom2(11) == 55);
  CHECK_THROWS_AS(bound_params(1000, 2, 4'000'000'000LL), std::overflow_error);
}
