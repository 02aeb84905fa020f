#include "c4ramsey/bounds.hpp"

#include <stdexcept>

namespace c4r {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("bound arithmetic overflow");
  return out;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("bound arithmetic overflow");
  return out;
}

// Both operands nonnegative, divisor positive.
std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return num / den + (num % den != 0); }

}  // namespace

std::int64_t binom2(std::int64_t x) {
  if (x < 0) throw std::invalid_argument("binom2 of a negative number");
  // One of x, x-1 is even; divide first to delay overflow.
  return x % 2 == 0 ? mul(x / 2, x - 1) : mul(x, (x - 1) / 2);
}

std::int64_t min_pair_sum(std::int64_t total, std::int64_t length) {
  if (length < 1) throw std::invalid_argument("sequence length must be at least 1");
  if (total < 0) throw std::invalid_argument("sum must be nonnegative");
  const std::int64_t a = total / length;
  const std::int64_t r = total % length;
  return add(mul(r, binom2(a + 1)), mul(length - r, binom2(a)));
}

BoundParams bound_params(int p, int k, std::int64_t n) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  BoundParams out;
  out.p = p;
  out.k = k;
  out.n = n;
  const std::int64_t twice_edges = mul(mul(n, n), mul(p, p - 1));
  out.edge_total = twice_edges / 2;
  out.per_color_min = ceil_div(twice_edges, mul(2, k));
  out.w = ceil_div(mul(2, out.per_color_min), p);
  const std::int64_t others = mul(p - 1, n);
  out.a = out.w / others;
  out.r = out.w % others;
  out.lhs = min_pair_sum(out.w, others);
  out.rhs = binom2(n);
  return out;
}

bool bound_holds(const BoundParams& params, Inequality mode) {
  if (mode == Inequality::strict) return params.lhs > params.rhs;
  return params.n >= 2 && params.lhs >= params.rhs;
}

bool bound_holds(int p, int k, std::int64_t n, Inequality mode) {
  return bound_holds(bound_params(p, k, n), mode);
}

std::optional<std::int64_t> smallest_bound(int p, int k, std::int64_t cap, Inequality mode) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  for (std::int64_t n = 1; n <= cap; ++n)
    if (bound_holds(p, k, n, mode)) return n;
  return std::nullopt;
}

std::int64_t tripartite_closed_form(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const std::int64_t s = static_cast<std::int64_t>(k) + 1;
  return mul(s, s) / 2 - 1;
}

int two_color_value(int p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  switch (p) {
    case 2: return 5;
    case 3: return 3;
    case 4:
    case 5: return 2;
    default: return 1;
  }
}

std::optional<RamseyInterval> classical_c4_ramsey(int k) {
  switch (k) {
    case 2: return RamseyInterval{6, 6};
    case 3: return RamseyInterval{11, 11};
    case 4: return RamseyInterval{18, 18};
    case 5: return RamseyInterval{27, 29};
    default: return std::nullopt;
  }
}

std::optional<int> known_tripartite_value(int k) {
  switch (k) {
    case 2: return 3;
    case 3: return 7;
    case 4: return 11;
    default: return std::nullopt;
  }
}

std::optional<int> known_bipartite_value(int k) {
  switch (k) {
    case 2: return 5;
    case 3: return 11;
    case 4: return 19;
    default: return std::nullopt;
  }
}

std::optional<bool> is_trivial(int p, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (p < 1) throw std::invalid_argument("p must be positive");
  const auto known = classical_c4_ramsey(k);
  if (!known) return std::nullopt;
  if (p >= known->upper) return true;
  if (p < known->lower) return false;
  return std::nullopt;
}

}  // namespace c4r
