#pragma once

// Counting upper bounds for multipartite C4 Ramsey numbers r_p(C4, k), plus
// the small exact values they are checked against. Everything here is exact
// 64-bit integer arithmetic; overflow throws std::overflow_error.

#include <cstdint>
#include <optional>

namespace c4r {

// binom(x, 2) for x >= 0.
std::int64_t binom2(std::int64_t x);

// Minimum of sum binom(a_i, 2) over nonnegative integer sequences a_1..a_m
// with sum `total`. With total = a*m + r, 0 <= r < m, this is
// r*binom(a+1, 2) + (m-r)*binom(a, 2), attained exactly by the balanced
// sequences. Throws std::invalid_argument when m < 1 or total < 0.
std::int64_t min_pair_sum(std::int64_t total, std::int64_t length);

// Intermediate quantities of the pigeonhole bound for K_n^p with k colors.
struct BoundParams {
  int p = 0;
  int k = 0;
  std::int64_t n = 0;
  std::int64_t edge_total = 0;     // n^2 p (p-1) / 2
  std::int64_t per_color_min = 0;  // ceil(edge_total / k): the busiest color has at least this many
  std::int64_t w = 0;              // ceil(2 * per_color_min / p): its degree sum into some part
  std::int64_t a = 0;              // w = a*(p-1)*n + r
  std::int64_t r = 0;
  std::int64_t lhs = 0;            // min_pair_sum(w, (p-1)*n)
  std::int64_t rhs = 0;            // binom(n, 2)
};

// How lhs is compared against rhs.
//   strict:    lhs > rhs. The pigeonhole step is sound, so true implies r_p(C4,k) <= n.
//   published: lhs >= rhs with n >= 2. This is the comparison that reproduces
//              the published table of upper bounds; it differs from strict only
//              on exact equality lhs == rhs.
enum class Inequality { strict, published };

// Throws std::invalid_argument unless p >= 2, k >= 2, n >= 1.
BoundParams bound_params(int p, int k, std::int64_t n);

bool bound_holds(const BoundParams& params, Inequality mode = Inequality::strict);
bool bound_holds(int p, int k, std::int64_t n, Inequality mode = Inequality::strict);

// Least n in [1, cap] for which the bound holds, scanning every n.
std::optional<std::int64_t> smallest_bound(int p, int k, std::int64_t cap,
                                           Inequality mode = Inequality::published);

// floor((k+1)^2 / 2) - 1, the tripartite upper bound.
std::int64_t tripartite_closed_form(int k);

// r_p(C4, 2): 5, 3, 2, 2 for p = 2..5 and 1 for p >= 6.
int two_color_value(int p);

// Classical R_k(C4) as an interval [lower, upper]; exact when equal.
struct RamseyInterval {
  int lower = 0;
  int upper = 0;
  bool exact() const { return lower == upper; }
};

// Known for k = 2..5 (6, 11, 18, [27, 29]).
std::optional<RamseyInterval> classical_c4_ramsey(int k);

// Exactly known r_3(C4, k) for k = 2..4 and r_2(C4, k) for k = 2..4.
std::optional<int> known_tripartite_value(int k);
std::optional<int> known_bipartite_value(int k);

// r_p(C4, k) == 1 holds iff p >= R_k(C4). nullopt when R_k(C4) is not known
// precisely enough to decide (unknown k, or p inside the known interval).
std::optional<bool> is_trivial(int p, int k);

}  // namespace c4r
