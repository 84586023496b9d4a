#include <gtest/gtest.h>

#include "eulerbound/render.hpp"

namespace eulerbound {
namespace {

TEST(Render, ValueWithExactForm) {
  EXPECT_EQ(render_value(BigRat(1, 24), 6), "0.041666 (=1/24)");
  EXPECT_EQ(render_value(BigRat(-5, 288), 4), "-0.0173 (=-5/288)");
  EXPECT_EQ(render_value(BigRat(3), 4), "3");
}

TEST(Render, DecimalModes) {
  EXPECT_EQ(decimal(BigRat(2, 3), 3), "0.666");
  EXPECT_EQ(decimal(BigRat(2, 3), 3, Rounding::Up), "0.667");
  EXPECT_EQ(decimal(BigRat(-2, 3), 3, Rounding::Down), "-0.667");
  EXPECT_EQ(decimal(BigRat(-2, 3), 3, Rounding::Up), "-0.666");
  EXPECT_EQ(decimal(BigRat(-1, 3000), 2), "-0.00");
  EXPECT_EQ(decimal(BigRat(7, 2), 0), "3");
}

TEST(Render, IntervalsRoundOutward) {
  const RatInterval x(BigRat(1, 3), BigRat(2, 3));
  EXPECT_EQ(render_interval_csv(x, 2), "0.33,0.67");
  EXPECT_EQ(render_interval(x, 2), "[0.33, 0.67]");
  EXPECT_EQ(render_interval_csv(RatInterval(BigRat(-2, 3), BigRat(-1, 3)), 2), "-0.67,-0.33");
}

TEST(RenderProperty, OutwardRoundingEncloses) {
  for (long p = -40; p <= 40; p += 3) {
    for (long q = 1; q <= 13; q += 4) {
      const BigRat lo(p, q);
      const BigRat hi = lo + BigRat(1, 997);
      for (unsigned d : {0U, 2U, 5U}) {
        const std::string s = render_interval_csv(RatInterval(lo, hi), d);
        const auto comma = s.find(',');
        const BigRat scale = pow10(static_cast<long>(d));
        auto parse_dec = [&](std::string t) {
          const auto dot = t.find('.');
          if (dot != std::string::npos) t.erase(dot, 1);
          return BigRat::parse(t) / scale;
        };
        EXPECT_LE(parse_dec(s.substr(0, comma)), lo) << s;
        EXPECT_GE(parse_dec(s.substr(comma + 1)), hi) << s;
      }
    }
  }
}

TEST(Render, Join) {
  EXPECT_EQ(join({"a", "b", "c"}, ", "), "a, b, c");
  EXPECT_EQ(join({}, ","), "");
}

}  // namespace
}  // namespace eulerbound
