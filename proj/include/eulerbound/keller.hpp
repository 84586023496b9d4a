#pragma once

// Keller's limit, normalized: x_n = (n+1) E(n) - n E(n-1) with
// E(n) = (1/e)(1 + 1/n)^n tends to 1, and n^2 (x_n - 1) tends to 1/24.
// Both follow from the rational sandwich
//   (n+1) u(n) - n v(n-1)  <  x_n  <  (n+1) v(n) - n u(n-1).

#include <string>
#include <utility>
#include <vector>

#include "eulerbound/enclosure.hpp"
#include "eulerbound/reference_fixtures.hpp"

namespace eulerbound {

struct KellerTerm {
  long n;
  RatInterval value;
};

inline KellerTerm keller_term(long n, const BigRat& target_width) {
  if (n < 2) throw DomainError("keller_term: n must be >= 2");
  const BigRat np1(n + 1);
  const BigRat nn(n);
  // (n+1) w1 + n w2 <= target_width
  const BigRat inner = target_width / BigRat(2 * (2 * n + 1));
  const RatInterval e_n = normalized_euler_interval(nn, inner);
  const RatInterval e_prev = normalized_euler_interval(BigRat(n - 1), inner);
  return {n, RatInterval(np1) * e_n - RatInterval(nn) * e_prev};
}

/// Exact ((n+1)u(n) - n v(n-1), (n+1)v(n) - n u(n-1)).
inline std::pair<BigRat, BigRat> sandwich_bounds(long n, Variant variant = Variant::Dedup) {
  if (n < 2) throw DomainError("sandwich_bounds: n must be >= 2");
  const BoundSpec u = bounds::lower();
  const BoundSpec v = bounds::upper(variant);
  const BigRat nn(n);
  const BigRat np1(n + 1);
  const BigRat nm1(n - 1);
  return {np1 * u(nn) - nn * v(nm1), np1 * v(nn) - nn * u(nm1)};
}

/// The two sandwich sides as rational functions of n.
inline std::pair<RatFunc, RatFunc> sandwich_functions(Variant variant = Variant::Dedup) {
  const RatFunc u = bounds::lower().to_ratfunc();
  const RatFunc v = bounds::upper(variant).to_ratfunc();
  const RatFunc n = Poly::x();
  const RatFunc np1 = Poly({1, 1});
  return {np1 * u - n * taylor_shift(v, BigRat(-1)), np1 * v - n * taylor_shift(u, BigRat(-1))};
}

/// n^2 (side - 1).
inline RatFunc second_order_scaling(const RatFunc& side) {
  const RatFunc n = Poly::x();
  return n * n * (side - RatFunc(BigRat(1)));
}

struct SandwichLimits {
  BigRat limit;  // of x_n; e for the unnormalized Keller sequence
  BigRat rate;   // of n^2 (x_n - 1); e/24 unnormalized
};

inline SandwichLimits sandwich_limits(Variant variant = Variant::Dedup) {
  const auto [lo, hi] = sandwich_functions(variant);
  const BigRat limit_lo = leading_ratio(lo);
  const BigRat limit_hi = leading_ratio(hi);
  const BigRat rate_lo = leading_ratio(second_order_scaling(lo));
  const BigRat rate_hi = leading_ratio(second_order_scaling(hi));
  if (limit_lo != limit_hi || rate_lo != rate_hi)
    throw DegreeMismatch("sandwich sides disagree: limits " + limit_lo.str() + " vs " + limit_hi.str() + ", rates " +
                         rate_lo.str() + " vs " + rate_hi.str());
  return {limit_lo, rate_lo};
}

struct DisplayMatch {
  std::string name;
  bool denominator_divides = false;  // side * printed denominator is a polynomial
  long numerator_degree = -1;
  std::vector<BigRat> computed;  // top coefficients, highest degree first
  std::vector<BigRat> printed;
  std::vector<bool> equal;
};

/// Recomputes the numerators over 17418240 n^a (n-1)^b (12n-1)(12n+11) and
/// compares the leading coefficients that are printed.
inline std::vector<DisplayMatch> match_sandwich_displays(Variant variant = Variant::Dedup) {
  const auto [lo, hi] = sandwich_functions(variant);
  const RatFunc sides[4] = {lo, hi, second_order_scaling(lo), second_order_scaling(hi)};
  std::vector<DisplayMatch> out;
  const auto displays = fixtures::sandwich_displays();
  for (std::size_t i = 0; i < displays.size(); ++i) {
    const auto& d = displays[i];
    const Poly n = Poly::x();
    const Poly den = pow(n, static_cast<unsigned>(d.n_power)) * pow(Poly({-1, 1}), static_cast<unsigned>(d.n_minus_one_power)) *
                     Poly({-1, 12}) * Poly({11, 12}) * BigRat(fixtures::sandwich_denominator_constant());
    const RatFunc numer = sides[i] * RatFunc(den);
    DisplayMatch m{d.name};
    m.denominator_divides = numer.den().degree() == 0;
    if (m.denominator_divides) {
      const Poly p = numer.num() * (BigRat(1) / numer.den().leading());
      m.numerator_degree = p.degree();
      for (std::size_t k = 0; k < d.leading.size(); ++k) {
        const long idx = p.degree() - static_cast<long>(k);
        m.computed.push_back(idx >= 0 ? p.coeff(static_cast<std::size_t>(idx)) : BigRat(0));
      }
    }
    for (const auto& s : d.leading) m.printed.push_back(BigRat::parse(s));
    for (std::size_t k = 0; k < m.printed.size(); ++k)
      m.equal.push_back(k < m.computed.size() && m.computed[k] == m.printed[k]);
    out.push_back(std::move(m));
  }
  return out;
}

struct ConvergenceRow {
  long n;
  RatInterval scaled;  // enclosure of n^2 (x_n - 1)
  BigRat sandwich_lo;  // n^2 (lower side - 1)
  BigRat sandwich_hi;
  [[nodiscard]] bool contained() const { return sandwich_lo <= scaled.lo() && scaled.hi() <= sandwich_hi; }
};

inline std::vector<ConvergenceRow> convergence_table(const std::vector<long>& ns, const BigRat& target_width,
                                                     Variant variant = Variant::Dedup) {
  std::vector<ConvergenceRow> rows;
  rows.reserve(ns.size());
  for (long n : ns) {
    const BigRat n2 = BigRat(n) * BigRat(n);
    const KellerTerm term = keller_term(n, target_width / n2);
    const auto [lo, hi] = sandwich_bounds(n, variant);
    rows.push_back({n, RatInterval(n2) * (term.value - RatInterval(BigRat(1))), n2 * (lo - BigRat(1)),
                    n2 * (hi - BigRat(1))});
  }
  return rows;
}

}  // namespace eulerbound
