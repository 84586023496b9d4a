#pragma once

// Asymptotic expansions in t = 1/x of (1/e)(1 + 1/x)^x and of its gap to
// rational approximants (x + a)/(x + b) + sum c_k / x^k.

#include <cstddef>
#include <optional>

#include "eulerbound/bound_spec.hpp"
#include "eulerbound/series.hpp"

namespace eulerbound {

inline constexpr std::size_t kDefaultOrder = 10;

/// x ln(1 + 1/x) - 1 = sum_{k>=1} (-1)^k t^k / (k + 1).
inline QSeries series_xlog_minus_one(std::size_t order) {
  const QSeries log1p = series_log1p(order + 1);
  QSeries out(order);
  for (std::size_t k = 1; k <= order; ++k) out[k] = log1p[k + 1];
  return out;
}

/// (1/e)(1 + t)^(1/t).
inline QSeries series_normalized_euler(std::size_t order) {
  return series_exp_compose(series_xlog_minus_one(order), order);
}

/// w = x ln(1 + 1/x) - 1 - ln((x + a)/(x + b)) with a, b symbolic.
inline ParamSeries expand_relative_error(std::size_t order = kDefaultOrder) {
  if (order < 3) throw DomainError("expand_relative_error: order must be >= 3");
  const QSeries log1p = series_log1p(order);
  ParamSeries base(order);
  const QSeries xlog = series_xlog_minus_one(order);
  for (std::size_t k = 0; k <= order; ++k) base[k] = ParamPoly(xlog[k]);
  // ln((1 + a t)/(1 + b t)) = ln(1 + a t) - ln(1 + b t)
  const ParamSeries log_a = scale_variable<ParamPoly>(log1p, ParamPoly::a());
  const ParamSeries log_b = scale_variable<ParamPoly>(log1p, ParamPoly::b());
  return base - (log_a - log_b);
}

struct OptimalParams {
  BigRat a;
  BigRat b;
  /// t^3 coefficient of w at the optimum.
  BigRat residual;
};

/// Chooses a, b so the t^1 and t^2 coefficients of w vanish.
inline OptimalParams solve_optimal_params() {
  const ParamSeries w = expand_relative_error(kDefaultOrder);
  // t^1 coefficient is linear: alpha*a + beta*b + gamma = 0, solve for b.
  const ParamPoly& c1 = w[1];
  for (const auto& [e, c] : c1.terms())
    if (e.first + e.second > 1) throw DegenerateSystem("t^1 coefficient is not linear in (a, b)");
  const BigRat alpha = c1.coeff(1, 0);
  const BigRat beta = c1.coeff(0, 1);
  const BigRat gamma = c1.coeff(0, 0);
  if (beta.is_zero()) throw DegenerateSystem("t^1 coefficient does not involve b");
  const Poly b_of_a({-gamma / beta, -alpha / beta});

  // Substitute into the t^2 coefficient: a univariate polynomial in a.
  const Poly c2 = w[2].substitute_b(b_of_a);
  std::optional<BigRat> a;
  if (c2.degree() == 1) {
    a = -c2.coeff(0) / c2.coeff(1);
  } else if (c2.degree() == 2) {
    const BigRat disc = c2.coeff(1) * c2.coeff(1) - BigRat(4) * c2.coeff(2) * c2.coeff(0);
    BigRat root;
    if (disc.sign() < 0 || !exact_root(disc, 2, root)) throw DegenerateSystem("t^2 condition has no rational root");
    // b - a is fixed by the linear condition; the admissible root has a > 0.
    for (const BigRat& cand : {(-c2.coeff(1) + root) / (BigRat(2) * c2.coeff(2)),
                               (-c2.coeff(1) - root) / (BigRat(2) * c2.coeff(2))})
      if (cand.sign() > 0 && (!a || cand < *a)) a = cand;
  }
  if (!a) throw DegenerateSystem("t^2 condition does not determine a");
  const BigRat b = b_of_a(*a);
  return {*a, b, w[3].evaluate(*a, b)};
}

/// (1/e)(1 + 1/x)^x - bound(x) in powers of t = 1/x.
inline QSeries expand_bound_gap(const BoundSpec& bound, std::size_t order = kDefaultOrder) {
  if (order < bound.max_power()) throw DomainError("expand_bound_gap: order below the highest correction power");
  return series_normalized_euler(order) - bound.to_series(order);
}

/// x ln(1 + 1/x) - 1 - ln(bound(x)); requires bound -> 1 at infinity.
inline QSeries log_gap_series(const BoundSpec& bound, std::size_t order = kDefaultOrder) {
  return series_xlog_minus_one(order) - series_log(bound.to_series(order));
}

}  // namespace eulerbound
