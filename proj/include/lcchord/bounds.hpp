#pragma once

// Circumference thresholds as exact integer predicates.
//
// With n vertices, observed length L and deficiency k = n - L:
//
//   MAIN1  L >= f(n) = n - (1 + sqrt(4n-3))/2
//          <=> 2k - 1 <= sqrt(4n-3). For k = 0 the left side is negative and
//          the inequality holds; for k >= 1 both sides are nonnegative, so
//          squaring is an equivalence: 4k^2 - 4k + 1 <= 4n - 3
//          <=> n >= k^2 - k + 1 (which k = 0 satisfies as well).
//   MAIN2  L >= f(n) + 1
//          <=> 2k + 1 <= sqrt(4n-3) <=> n >= k^2 + k + 1 (both sides >= 0).
//   MAIN3  L >= h(n) = n - sqrt(n-1) + 1
//          <=> k + 1 <= sqrt(n-1) <=> (k+1)^2 <= n - 1.
//          Note n = 1 fails even at k = 0: h(1) = 2 > 1.
//   Q2     L >= 2 sqrt(n) <=> L^2 >= 4n (L >= 0).
//   HARVEY_DELTA (L is a minimum degree)  L >= sqrt(n) <=> L^2 >= n.
//
// The proofs only use weaker consequences of MAIN2/MAIN3 (n > k^2 - k + 1 and
// n > k^2 + 1); those are exposed separately as deficiency_consequence().
//
// A second, independent route evaluates the real-valued margin directly as
// the sign of a + b*sqrt(r) (+ c*sqrt(s)) with 128-bit integers; the
// monotonicity and corollary checks are built on it.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string_view>

#include "lcchord/error.hpp"

namespace lcchord {

enum class ThresholdId { main1, main2, main3, q2, harvey_delta };

inline std::string_view threshold_name(ThresholdId id) {
  switch (id) {
    case ThresholdId::main1: return "main1";
    case ThresholdId::main2: return "main2";
    case ThresholdId::main3: return "main3";
    case ThresholdId::q2: return "q2";
    case ThresholdId::harvey_delta: return "harvey-delta";
  }
  return "?";
}

inline constexpr std::int64_t kMaxThresholdOrder = 2'000'000'000;

namespace detail {

using i128 = __int128;

constexpr int sgn(i128 x) { return (x > 0) - (x < 0); }

/// Sign of a + b*sqrt(r), r >= 0.
constexpr int sign_surd(i128 a, i128 b, i128 r) {
  const int sb = r == 0 ? 0 : sgn(b);
  if (sb == 0) return sgn(a);
  if (a == 0 || sgn(a) == sb) return sb;
  const i128 lhs = a * a;
  const i128 rhs = b * b * r;
  if (lhs > rhs) return sgn(a);
  if (lhs < rhs) return sb;
  return 0;
}

/// Sign of a + b*sqrt(r) + c*sqrt(s), r, s >= 0.
constexpr int sign_surd2(i128 a, i128 b, i128 r, i128 c, i128 s) {
  // Sign of the radical part x = b sqrt(r) + c sqrt(s).
  int sx = 0;
  {
    const int sb = r == 0 ? 0 : sgn(b);
    const int sc = s == 0 ? 0 : sgn(c);
    if (sb == 0) sx = sc;
    else if (sc == 0 || sb == sc) sx = sb;
    else {
      const i128 l = b * b * r;
      const i128 m = c * c * s;
      sx = l > m ? sb : (l < m ? sc : 0);
    }
  }
  if (sx == 0) return sgn(a);
  if (a == 0 || sgn(a) == sx) return sx;
  // Opposite signs: compare a^2 with x^2 = b^2 r + c^2 s + 2bc sqrt(rs).
  const int d = sign_surd(a * a - b * b * r - c * c * s, -2 * b * c, r * s);
  if (d > 0) return sgn(a);
  if (d < 0) return sx;
  return 0;
}

inline void check_threshold_args(ThresholdId id, std::int64_t n, std::int64_t value) {
  if (n < 1 || n > kMaxThresholdOrder) throw Error(Errc::bad_range, "n must be in 1..2e9");
  const std::int64_t hi = id == ThresholdId::harvey_delta ? n - 1 : n;
  if (value < 0 || value > hi)
    throw Error(Errc::bad_range, "observed value " + std::to_string(value) + " outside 0.." + std::to_string(hi));
}

}  // namespace detail

/// Exact test of "observed length (or degree, for HARVEY_DELTA) reaches the
/// threshold".
inline bool meets_threshold(ThresholdId id, std::int64_t n, std::int64_t value) {
  detail::check_threshold_args(id, n, value);
  const std::int64_t k = n - value;
  switch (id) {
    case ThresholdId::main1: return n >= k * k - k + 1;
    case ThresholdId::main2: return n >= k * k + k + 1;
    case ThresholdId::main3: return (k + 1) * (k + 1) <= n - 1;
    case ThresholdId::q2: return value * value >= 4 * n;
    case ThresholdId::harvey_delta: return value * value >= n;
  }
  return false;
}

/// Sign of (value - threshold(n)) evaluated from the surd form directly.
inline int threshold_margin_sign(ThresholdId id, std::int64_t n, std::int64_t value) {
  detail::check_threshold_args(id, n, value);
  using detail::i128;
  const i128 N = n;
  const i128 L = value;
  switch (id) {
    case ThresholdId::main1: return detail::sign_surd(2 * L - 2 * N + 1, 1, 4 * N - 3);
    case ThresholdId::main2: return detail::sign_surd(2 * L - 2 * N - 1, 1, 4 * N - 3);
    case ThresholdId::main3: return detail::sign_surd(L - N - 1, 1, N - 1);
    case ThresholdId::q2: return detail::sign_surd(L, -2, N);
    case ThresholdId::harvey_delta: return detail::sign_surd(L, -1, N);
  }
  return 0;
}

/// Real value of the threshold, for display only.
inline long double threshold_value(ThresholdId id, std::int64_t n) {
  const long double N = static_cast<long double>(n);
  switch (id) {
    case ThresholdId::main1: return N - (1.0L + std::sqrt(4.0L * N - 3.0L)) / 2.0L;
    case ThresholdId::main2: return N - (1.0L + std::sqrt(4.0L * N - 3.0L)) / 2.0L + 1.0L;
    case ThresholdId::main3: return N - std::sqrt(N - 1.0L) + 1.0L;
    case ThresholdId::q2: return 2.0L * std::sqrt(N);
    case ThresholdId::harvey_delta: return std::sqrt(N);
  }
  return 0.0L;
}

/// The deficiency bound each proof actually uses for k >= 1: MAIN1
/// n >= k^2-k+1, MAIN2 n > k^2-k+1, MAIN3 n > k^2+1.
inline bool deficiency_consequence(ThresholdId id, std::int64_t n, std::int64_t value) {
  detail::check_threshold_args(id, n, value);
  const std::int64_t k = n - value;
  switch (id) {
    case ThresholdId::main1: return n >= k * k - k + 1;
    case ThresholdId::main2: return n > k * k - k + 1;
    case ThresholdId::main3: return n > k * k + 1;
    default: throw Error(Errc::bad_argument, "no deficiency form for " + std::string(threshold_name(id)));
  }
}

/// f(n) > c, exactly: 2(n - c) - 1 > sqrt(4n - 3).
inline bool f_exceeds(std::int64_t n, std::int64_t c) {
  if (n < 1) throw Error(Errc::bad_range, "f is defined for n >= 1");
  const detail::i128 d = 2 * (static_cast<detail::i128>(n) - c) - 1;
  return d > 0 && d * d > 4 * static_cast<detail::i128>(n) - 3;
}

struct Lemma2Result {
  bool part1 = false;
  /// Evaluated only for t >= 4 and a >= 2.
  std::optional<bool> part2;

  /// Both parts are theorems; false here means the arithmetic is broken.
  bool consistent() const { return part1 && part2.value_or(true); }
};

inline Lemma2Result check_lemma2(std::int64_t t, std::int64_t a, std::int64_t n) {
  if (t < 1 || a < 1) throw Error(Errc::precondition, "t and a must be positive");
  if (!(n >= 3 * t - a && 3 * t - a >= 1)) throw Error(Errc::precondition, "need n >= 3t - a >= 1");
  Lemma2Result r;
  r.part1 = f_exceeds(n, 2 * t - a - 1);
  if (t >= 4 && a >= 2) r.part2 = f_exceeds(n, 2 * t - a);
  return r;
}

/// f(n+1) > f(n) for every n in [n_lo, n_hi - 1], decided as the sign of
/// 2 - sqrt(4n+1) + sqrt(4n-3).
inline bool f_monotone_check(std::int64_t n_lo, std::int64_t n_hi) {
  if (n_lo < 1 || n_lo > n_hi || n_hi > kMaxThresholdOrder) throw Error(Errc::bad_range, "need 1 <= n_lo <= n_hi");
  for (std::int64_t n = n_lo; n < n_hi; ++n)
    if (detail::sign_surd2(2, -1, 4 * n + 1, 1, 4 * n - 3) <= 0) return false;
  return true;
}

/// Sign of (1 + sqrt(4n-3))/2 - sqrt(n); zero only at n = 1.
inline int corollary_fact_margin(std::int64_t n) {
  if (n < 1 || n > kMaxThresholdOrder) throw Error(Errc::bad_range, "n must be >= 1");
  return detail::sign_surd2(1, 1, 4 * n - 3, -2, n);
}

/// sqrt(n) <= (1 + sqrt(4n-3))/2 for all 1 <= n <= n_hi.
inline bool corollary_fact_check(std::int64_t n_hi) {
  if (n_hi < 1 || n_hi > kMaxThresholdOrder) throw Error(Errc::bad_range, "need n_hi >= 1");
  for (std::int64_t n = 1; n <= n_hi; ++n)
    if (corollary_fact_margin(n) < 0) return false;
  return true;
}

}  // namespace lcchord
