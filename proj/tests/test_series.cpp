#include <gtest/gtest.h>

#include "eulerbound/expansion.hpp"

namespace eulerbound {
namespace {

// Independent oracle: exp(s) = sum_j s^j / j! by repeated series products.
QSeries exp_by_powers(const QSeries& s, std::size_t order) {
  QSeries out(order);
  out[0] = BigRat(1);
  QSeries power(order);
  power[0] = BigRat(1);
  for (std::size_t j = 1; j <= order; ++j) {
    power = power * s.truncated(order);
    out = out + power * (BigRat(1) / BigRat(factorial(j)));
  }
  return out;
}

TEST(SeriesLog1p, Coefficients) {
  const QSeries s = series_log1p(6);
  EXPECT_EQ(s[0], BigRat(0));
  EXPECT_EQ(s[1], BigRat(1));
  EXPECT_EQ(s[2], BigRat(-1, 2));
  EXPECT_EQ(s[3], BigRat(1, 3));
  EXPECT_EQ(s[6], BigRat(-1, 6));
  EXPECT_THROW(series_log1p(0), DomainError);
}

TEST(SeriesExp, Examples) {
  const QSeries zero(4);
  const QSeries e0 = series_exp_compose(zero, 4);
  EXPECT_EQ(e0[0], BigRat(1));
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_TRUE(e0[k].is_zero());

  QSeries t(2);
  t[1] = BigRat(1);
  EXPECT_EQ(series_exp_compose(t, 2), QSeries(2, {1, 1, BigRat(1, 2)}));

  const QSeries e = series_exp_compose(series_xlog_minus_one(2), 2);
  EXPECT_EQ(e, QSeries(2, {1, BigRat(-1, 2), BigRat(11, 24)}));
}

TEST(SeriesExp, RecurrenceMatchesPowerSumOracle) {
  const QSeries s = series_xlog_minus_one(10);
  EXPECT_EQ(series_exp_compose(s, 10), exp_by_powers(s, 10));
}

TEST(SeriesExp, RejectsNonzeroConstantTerm) {
  EXPECT_THROW(series_exp_compose(QSeries(3, {1, 1}), 3), NonzeroConstantTerm);
}

TEST(SeriesProperty, ExpOfLog1pIsOnePlusT) {
  for (std::size_t order = 1; order <= 12; ++order) {
    const QSeries e = series_exp_compose(series_log1p(order), order);
    EXPECT_EQ(e[0], BigRat(1));
    EXPECT_EQ(e[1], BigRat(1));
    for (std::size_t k = 2; k <= order; ++k) EXPECT_TRUE(e[k].is_zero()) << "order " << order << " k " << k;
  }
}

TEST(SeriesProperty, LogInvertsExp) {
  const QSeries s = series_xlog_minus_one(9);
  EXPECT_EQ(series_log(series_exp_compose(s, 9)), s);
}

TEST(RelativeError, LeadingCoefficients) {
  const ParamSeries w = expand_relative_error(5);
  const ParamPoly a = ParamPoly::a();
  const ParamPoly b = ParamPoly::b();
  EXPECT_TRUE(w[0].is_zero());
  EXPECT_EQ(w[1], b - a - ParamPoly(BigRat(1, 2)));
  EXPECT_EQ(w[2], (a * a - b * b) * BigRat(1, 2) + ParamPoly(BigRat(1, 3)));
  EXPECT_EQ(w[3], (b * b * b - a * a * a) * BigRat(1, 3) - ParamPoly(BigRat(1, 4)));
  EXPECT_THROW(expand_relative_error(2), DomainError);
}

TEST(RelativeError, SerializationIsSortedTriples) {
  const auto triples = expand_relative_error(3)[2].triples();
  ASSERT_EQ(triples.size(), 3U);
  EXPECT_EQ(triples[0], std::make_tuple(0U, 0U, std::string("1/3")));
  EXPECT_EQ(triples[1], std::make_tuple(0U, 2U, std::string("-1/2")));
  EXPECT_EQ(triples[2], std::make_tuple(2U, 0U, std::string("1/2")));
}

TEST(RelativeError, VanishesToSecondOrderAtOptimum) {
  const ParamSeries w = expand_relative_error();
  EXPECT_TRUE(w[1].evaluate(BigRat(5, 12), BigRat(11, 12)).is_zero());
  EXPECT_TRUE(w[2].evaluate(BigRat(5, 12), BigRat(11, 12)).is_zero());
  EXPECT_FALSE(w[3].evaluate(BigRat(5, 12), BigRat(11, 12)).is_zero());
}

TEST(OptimalParams, SolvesExactly) {
  const OptimalParams p = solve_optimal_params();
  EXPECT_EQ(p.a, BigRat(5, 12));
  EXPECT_EQ(p.b, BigRat(11, 12));
  // b^3/3 - a^3/3 - 1/4 at the optimum
  EXPECT_EQ(p.residual, BigRat(-5, 288));
}

TEST(OptimalParams, EqualParametersCancelNothing) {
  const ParamSeries w = expand_relative_error();
  for (long k : {1, 2, 3}) {
    const BigRat a(k, 7);
    EXPECT_EQ(w[1].evaluate(a, a), BigRat(-1, 2));
  }
}

TEST(BoundGap, BareRationalCorrections) {
  const QSeries g = expand_bound_gap(bounds::optimal_rational());
  for (std::size_t k = 0; k <= 2; ++k) EXPECT_TRUE(g[k].is_zero());
  EXPECT_EQ(g[3], BigRat(-5, 288));
  EXPECT_EQ(g[4], BigRat(343, 8640));
  EXPECT_EQ(g[5], BigRat(-2621, 41472));
  EXPECT_EQ(g[6], BigRat(300901, 3483648));
}

TEST(BoundGap, LowerBoundMatchesThroughOrderFive) {
  // oracle: subtract u's series from the raw expansion coefficient by coefficient
  const QSeries raw = series_normalized_euler(8);
  const QSeries useries = bounds::lower().to_series(8);
  const QSeries g = expand_bound_gap(bounds::lower(), 8);
  for (std::size_t k = 0; k <= 8; ++k) EXPECT_EQ(g[k], raw[k] - useries[k]);
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_TRUE(g[k].is_zero()) << k;
  EXPECT_FALSE(g[6].is_zero());
}

TEST(BoundGap, DedupUpperMatchesThroughOrderSix) {
  const QSeries g = expand_bound_gap(bounds::upper(Variant::Dedup));
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_TRUE(g[k].is_zero()) << k;
  const QSeries h = expand_bound_gap(bounds::upper(Variant::AsWritten));
  EXPECT_EQ(h[5], BigRat(2621, 41472));
}

TEST(BoundGap, OrderBelowCorrectionPowerRejected) {
  EXPECT_THROW(expand_bound_gap(bounds::lower(), 4), DomainError);
}

TEST(BoundGapProperty, LinearInCorrections) {
  const BoundSpec base = bounds::lower();
  const QSeries g0 = expand_bound_gap(base);
  for (unsigned k = 1; k <= 8; ++k) {
    const BigRat c(static_cast<long>(k * 3 + 1), 97);
    const QSeries g1 = expand_bound_gap(base.with_correction(c, k));
    for (std::size_t j = 0; j <= g0.order(); ++j) EXPECT_EQ(g1[j], j == k ? g0[j] - c : g0[j]);
  }
}

TEST(BoundGapProperty, LogGapVanishesAtInfinity) {
  for (const BoundSpec& b : {bounds::optimal_rational(), bounds::lower(), bounds::upper(Variant::AsWritten),
                             bounds::upper(Variant::Dedup), BoundSpec(BigRat(3), BigRat(-1, 5), {{BigRat(7), 2}})}) {
    EXPECT_EQ(b.to_series(4)[0], BigRat(1));
    EXPECT_TRUE(log_gap_series(b)[0].is_zero());
  }
}

TEST(BoundSpec, RejectsBadPowers) {
  EXPECT_THROW(BoundSpec(1, 2, {{BigRat(1), 0}}), DomainError);
  EXPECT_THROW(BoundSpec(1, 2, {{BigRat(1), 3}, {BigRat(1), 3}}), DomainError);
}

TEST(BoundSpec, RationalFormAgreesWithPointEvaluation) {
  for (const BoundSpec& b : {bounds::lower(), bounds::upper(Variant::AsWritten)}) {
    const RatFunc r = b.to_ratfunc();
    for (long n : {1, 2, 7, 100}) EXPECT_EQ(r(BigRat(n)), b(BigRat(n)));
  }
  EXPECT_EQ(bounds::lower()(BigRat(1)),
            BigRat(17, 23) - BigRat(5, 288) + BigRat(343, 8640) - BigRat(2621, 41472));
}

}  // namespace
}  // namespace eulerbound
