#pragma once

// Rigorous enclosures of (1/e)(1 + 1/x)^x at rational x >= 1. Every endpoint
// is an exact rational and all rounding is outward.

#include <algorithm>
#include <optional>
#include <string>

#include "eulerbound/bound_spec.hpp"
#include "eulerbound/interval.hpp"

namespace eulerbound {

/// 10^-30.
inline BigRat default_width() { return pow10(-30); }

/// ln(1 + 1/n) between the alternating partial sums S_k and S_{k+1} of
/// sum (-1)^(j+1) / (j n^j). Width is 1/((k+1) n^(k+1)).
inline RatInterval ln1p_interval(const BigRat& n, unsigned k) {
  if (n < BigRat(1)) throw DomainError("ln1p_interval: n must be >= 1");
  if (k < 2) throw DomainError("ln1p_interval: k must be >= 2");
  const BigRat inv = BigRat(1) / n;
  BigRat power = inv;
  BigRat sum;
  for (unsigned j = 1; j <= k; ++j) {
    const BigRat term = power / BigRat(static_cast<long>(j));
    sum += j % 2 == 1 ? term : -term;
    power *= inv;
  }
  const BigRat next_term = power / BigRat(static_cast<long>(k + 1));
  const BigRat next = (k + 1) % 2 == 1 ? sum + next_term : sum - next_term;
  return RatInterval::hull(sum, next);
}

/// ln(1 + 1/n) = 2 atanh(z), z = 1/(2n + 1), from `terms` terms of the odd
/// series plus the geometric tail bound 2 z^(2J+1) / ((2J+1)(1 - z^2)).
inline RatInterval ln1p_atanh_interval(const BigRat& n, unsigned terms) {
  if (n < BigRat(1)) throw DomainError("ln1p_atanh_interval: n must be >= 1");
  const BigRat z = BigRat(1) / (BigRat(2) * n + BigRat(1));
  const BigRat z2 = z * z;
  BigRat power = z;
  BigRat sum;
  for (unsigned j = 0; j < terms; ++j) {
    sum += power / BigRat(static_cast<long>(2 * j + 1));
    power *= z2;
  }
  const BigRat tail = power / (BigRat(static_cast<long>(2 * terms + 1)) * (BigRat(1) - z2));
  return {BigRat(2) * sum, BigRat(2) * (sum + tail)};
}

/// exp over s from the degree-m Taylor polynomial at each endpoint, widened
/// by |x|^(m+1) / ((m+1)! (1 - |x|)).
inline RatInterval exp_interval(const RatInterval& s, unsigned m) {
  const BigRat half(1, 2);
  if (abs(s.lo()) > half || abs(s.hi()) > half) throw DomainError("exp_interval: endpoints must lie in [-1/2, 1/2]");
  if (m < 2) throw DomainError("exp_interval: m must be >= 2");
  const BigRat fact(factorial(m + 1));
  auto taylor = [m](const BigRat& x) {
    BigRat acc(1);
    for (unsigned j = m; j >= 1; --j) acc = BigRat(1) + acc * x / BigRat(static_cast<long>(j));
    return acc;
  };
  auto remainder = [&](const BigRat& x) {
    const BigRat ax = abs(x);
    return pow(ax, static_cast<long>(m + 1)) / (fact * (BigRat(1) - ax));
  };
  return {taylor(s.lo()) - remainder(s.lo()), taylor(s.hi()) + remainder(s.hi())};
}

struct RefinementPolicy {
  unsigned initial_terms = 8;
  unsigned max_iterations = 64;
};

/// exp(n ln(1 + 1/n) - 1), refined until width <= target_width.
///
/// The logarithm uses the atanh series: the alternating series of
/// ln1p_interval needs on the order of 1/w terms at n = 1.
inline RatInterval normalized_euler_interval(const BigRat& n, const BigRat& target_width,
                                             RefinementPolicy policy = {}) {
  if (n < BigRat(1)) throw DomainError("normalized_euler_interval: n must be >= 1");
  const unsigned long bits = bits_for_width(target_width) + 8;
  unsigned k = policy.initial_terms;
  std::optional<RatInterval> result;
  for (unsigned it = 0; it < policy.max_iterations && k <= (1U << 20); ++it, k *= 2) {
    const RatInterval log = ln1p_atanh_interval(n, k);
    // n ln(1 + 1/n) - 1 lies in [ln 2 - 1, 0) for n >= 1.
    RatInterval exponent = round_outward(RatInterval(n) * log - RatInterval(BigRat(1)), bits);
    if (exponent.hi().sign() > 0) exponent = RatInterval(exponent.lo(), BigRat(0));
    RatInterval next = round_outward(exp_interval(exponent, k), bits);
    // Keep successive refinements nested.
    if (result) next = RatInterval(std::max(next.lo(), result->lo()), std::min(next.hi(), result->hi()));
    result = next;
    if (result->width() <= target_width) break;
  }
  return *result;
}

/// e itself, as exp(1/2)^2.
inline RatInterval e_interval(const BigRat& target_width) {
  const unsigned long bits = bits_for_width(target_width) + 8;
  for (unsigned m = 8;; m *= 2) {
    const RatInterval h = exp_interval(RatInterval(BigRat(1, 2)), m);
    const RatInterval e = round_outward(h * h, bits);
    if (e.width() <= target_width) return e;
  }
}

enum class Outcome { Holds, Fails, Undecided };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "Holds";
    case Outcome::Fails: return "Fails";
    default: return "Undecided";
  }
}

/// lower < value < upper, judged against an enclosure of value.
struct CheckResult {
  Outcome outcome;
  std::optional<Side> failed_side;
  BigRat n;
  BigRat lower;
  BigRat upper;
  RatInterval enclosure;
};

inline CheckResult judge_strict(const BigRat& n, const BigRat& lower, const BigRat& upper, const RatInterval& enc) {
  CheckResult r{Outcome::Holds, std::nullopt, n, lower, upper, enc};
  if (enc.hi() <= lower) {
    r.outcome = Outcome::Fails;
    r.failed_side = Side::Lower;
  } else if (enc.lo() >= upper) {
    r.outcome = Outcome::Fails;
    r.failed_side = Side::Upper;
  } else if (!(lower < enc.lo() && enc.hi() < upper)) {
    r.outcome = Outcome::Undecided;
  }
  return r;
}

/// u(n) < (1/e)(1 + 1/n)^n < v(n).
inline CheckResult check_theorem1_at(const BigRat& n, Variant variant, const BigRat& width = default_width()) {
  if (n < BigRat(1)) throw DomainError("check_theorem1_at: n must be >= 1");
  return judge_strict(n, bounds::lower()(n), bounds::upper(variant)(n), normalized_euler_interval(n, width));
}

/// 2n/(2n+1) < (1/e)(1 + 1/n)^n < (2n+1)/(2n+2).
inline CheckResult check_classic_at(long n, const BigRat& width = default_width()) {
  if (n < 1) throw DomainError("check_classic_at: n must be >= 1");
  const BigRat nn(n);
  return judge_strict(nn, BigRat(2 * n, 2 * n + 1), BigRat(2 * n + 1, 2 * n + 2), normalized_euler_interval(nn, width));
}

}  // namespace eulerbound
