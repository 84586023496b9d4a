#include <gtest/gtest.h>

#include <random>

#include "eulerbound/reference_fixtures.hpp"
#include "eulerbound/ratfunc.hpp"

namespace eulerbound {
namespace {

TEST(BigRat, CanonicalForm) {
  const BigRat r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(BigRat(0, 7).str(), "0");
  EXPECT_EQ(BigRat(0, 7).den(), 1);
  EXPECT_THROW(BigRat(1, 0), DomainError);
}

TEST(BigRat, ParseRoundTrip) {
  for (const char* s : {"5/12", "-2621/41472", "300901/3483648", "0", "17"})
    EXPECT_EQ(BigRat::parse(s).str(), s);
  EXPECT_EQ(BigRat::parse("10/4"), BigRat(5, 2));
  EXPECT_THROW(BigRat::parse("-6/-3"), ParseError);
}

TEST(BigRat, ParseRejectsGarbage) {
  EXPECT_THROW(BigRat::parse(""), ParseError);
  EXPECT_THROW(BigRat::parse("1/0"), ParseError);
  EXPECT_THROW(BigRat::parse("1.5"), ParseError);
  EXPECT_THROW(BigRat::parse("/3"), ParseError);
}

TEST(BigRat, Powers) {
  EXPECT_EQ(pow(BigRat(2, 3), 3), BigRat(8, 27));
  EXPECT_EQ(pow(BigRat(2, 3), -2), BigRat(9, 4));
  BigRat root;
  EXPECT_TRUE(exact_root(BigRat(64, 27), 3, root));
  EXPECT_EQ(root, BigRat(4, 3));
  EXPECT_FALSE(exact_root(BigRat(2), 2, root));
}

TEST(Poly, GcdExamples) {
  const Poly x2m1({-1, 0, 1});
  const Poly xm1({-1, 1});
  EXPECT_EQ(gcd(x2m1, xm1), xm1);
  // gcd with zero is the monic input
  EXPECT_EQ(gcd(Poly({3, 6}), Poly()), Poly({BigRat(1, 2), 1}));
  // distinct linear factors: the Euclid step leaves the constant 12
  EXPECT_EQ(gcd(Poly({11, 12}), Poly({-1, 12})), Poly::constant(1));
}

TEST(Poly, TaylorShiftExamples) {
  EXPECT_EQ(taylor_shift(Poly({0, 0, 1}), BigRat(1)), Poly({1, 2, 1}));
  const Poly p({3, -1, BigRat(2, 7), 5});
  EXPECT_EQ(taylor_shift(p, BigRat(0)), p);
  EXPECT_EQ(taylor_shift(Poly({-1, 1}), BigRat(1)), Poly::x());
}

TEST(Poly, EvaluatePrintedP) {
  // sum of the printed coefficients
  EXPECT_EQ(fixtures::P()(BigRat(1)), BigRat(3330241));
}

TEST(Poly, StripRootAndPrimitivePart) {
  const Poly p = pow(Poly({-1, 1}), 3) * Poly({2, 1});
  const auto [m, rest] = strip_root(p, BigRat(1));
  EXPECT_EQ(m, 3U);
  EXPECT_EQ(rest, Poly({2, 1}));
  EXPECT_EQ(primitive_part(Poly({BigRat(-1, 2), BigRat(-3, 4)})), Poly({2, 3}));
}

TEST(Poly, SquarefreeFactors) {
  const Poly a({1, 1});
  const Poly b({-2, 0, 1});
  const auto f = squarefree_factors(a * pow(b, 2) * BigRat(5));
  ASSERT_EQ(f.size(), 2U);
  EXPECT_EQ(f[0], a);
  EXPECT_EQ(f[1], b);
}

TEST(RatFunc, DerivativeExamples) {
  const RatFunc inv_x(Poly::constant(1), Poly::x());
  EXPECT_EQ(derivative(inv_x), RatFunc(Poly::constant(-1), Poly({0, 0, 1})));

  const Poly den({BigRat(11, 12), 1});
  const RatFunc r(Poly({BigRat(5, 12), 1}), den);
  // (x+b - (x+a))/(x+b)^2 with b - a = 1/2
  EXPECT_EQ(derivative(r), RatFunc(Poly::constant(BigRat(1, 2)), den * den));

  EXPECT_TRUE(derivative(derivative(RatFunc(BigRat(7)))).is_zero());
}

TEST(RatFunc, DerivativeMatchesDifferenceQuotient) {
  // independent check: symmetric difference quotient converges at rate h^2
  const RatFunc r(Poly({BigRat(5, 12), 1}), Poly({BigRat(11, 12), 1}));
  const BigRat x(3, 2);
  const BigRat h(1, 1000000);
  const BigRat dq = (r(x + h) - r(x - h)) / (BigRat(2) * h);
  EXPECT_LT(abs(dq - derivative(r)(x)), BigRat(1, 1000000000));
}

TEST(RatFunc, EvalExamples) {
  const RatFunc r(Poly({BigRat(5, 12), 1}), Poly({BigRat(11, 12), 1}));
  EXPECT_EQ(r(BigRat(1)), BigRat(17, 23));
  EXPECT_THROW(RatFunc(Poly::constant(1), Poly::x())(BigRat(0)), PoleError);
}

TEST(RatFunc, CanonicalDenominatorIsMonic) {
  const RatFunc r(Poly({2, 2}), Poly({-3, 0, -3}));  // 2(x+1) / -3(x^2+1)
  EXPECT_EQ(r.den().leading(), BigRat(1));
  EXPECT_EQ(r.num(), Poly({BigRat(-2, 3), BigRat(-2, 3)}));
}

// Random small polynomials with coefficients in [-4, 4] / [1, 3].
class RandomPolys {
 public:
  explicit RandomPolys(unsigned seed) : rng_(seed) {}
  Poly next(int max_degree = 3) {
    std::uniform_int_distribution<int> deg(0, max_degree), num(-4, 4), den(1, 3);
    std::vector<BigRat> c(static_cast<std::size_t>(deg(rng_) + 1));
    for (auto& v : c) v = BigRat(num(rng_), den(rng_));
    c.back() = BigRat(num(rng_) >= 0 ? 1 : -1) * BigRat(den(rng_));
    return Poly(std::move(c));
  }
  BigRat scalar() {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    return {num(rng_), den(rng_)};
  }

 private:
  std::mt19937 rng_;
};

TEST(RationalCoreProperty, GcdDistributesOverCommonFactor) {
  RandomPolys gen(7);
  for (int i = 0; i < 100; ++i) {
    const Poly p = gen.next(), q = gen.next(), r = gen.next(2);
    if (r.is_zero() || (p.is_zero() && q.is_zero())) continue;
    EXPECT_EQ(gcd(p * r, q * r), monic(monic(r) * gcd(p, q))) << p << " | " << q << " | " << r;
  }
}

TEST(RationalCoreProperty, TaylorShiftIsRingHomomorphism) {
  RandomPolys gen(11);
  for (int i = 0; i < 100; ++i) {
    const Poly p = gen.next(4), q = gen.next(4);
    const BigRat c = gen.scalar();
    EXPECT_EQ(taylor_shift(p * q, c), taylor_shift(p, c) * taylor_shift(q, c));
    EXPECT_EQ(taylor_shift(p + q, c), taylor_shift(p, c) + taylor_shift(q, c));
    EXPECT_EQ(taylor_shift(taylor_shift(p, c), -c), p);
  }
}

TEST(RationalCoreProperty, QuotientRuleAgreesWithProductRule) {
  RandomPolys gen(13);
  for (int i = 0; i < 60; ++i) {
    const Poly a = gen.next(), b = gen.next(), c = gen.next(), d = gen.next();
    if (b.is_zero() || d.is_zero()) continue;
    const RatFunc r1(a, b), r2(c, d);
    EXPECT_EQ(derivative(r1 * r2), derivative(r1) * r2 + r1 * derivative(r2));
    // unnormalized quotient rule on (a s)/(b s)
    const Poly s = gen.next(2);
    if (s.is_zero()) continue;
    EXPECT_EQ(derivative(RatFunc(a * s, b * s)), derivative(r1));
  }
}

TEST(RationalCoreProperty, NormalizationIdempotentAndValuePreserving) {
  RandomPolys gen(17);
  for (int i = 0; i < 100; ++i) {
    const Poly p = gen.next(), q = gen.next(), s = gen.next(2);
    if (q.is_zero() || s.is_zero()) continue;
    const RatFunc r(p * s, q * s);
    EXPECT_EQ(RatFunc(r.num(), r.den()), r);
    for (int x = -3; x <= 3; ++x) {
      const BigRat xv(x, 2);
      if (q(xv).is_zero() || s(xv).is_zero()) continue;
      EXPECT_EQ(r(xv), p(xv) / q(xv));
    }
  }
}

}  // namespace
}  // namespace eulerbound
