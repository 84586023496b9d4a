#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulerbound/ratfunc.hpp"
#include "eulerbound/series.hpp"

namespace eulerbound {

/// How to read the upper bound whose x^-5 term is printed twice.
enum class Variant { AsWritten, Dedup };

inline std::string to_string(Variant v) { return v == Variant::AsWritten ? "as-written" : "dedup"; }

inline Variant parse_variant(std::string_view s) {
  if (s == "as-written") return Variant::AsWritten;
  if (s == "dedup") return Variant::Dedup;
  throw ParseError("unknown variant '" + std::string(s) + "' (expected as-written|dedup)");
}

enum class Side { Lower, Upper };

inline std::string to_string(Side s) { return s == Side::Lower ? "lower" : "upper"; }

struct Correction {
  BigRat coeff;
  unsigned power;
  friend bool operator==(const Correction&, const Correction&) = default;
};

/// (x + a)/(x + b) + sum_k c_k / x^k with strictly increasing powers k >= 1.
class BoundSpec {
 public:
  BoundSpec(BigRat a, BigRat b, std::vector<Correction> corrections = {}, std::string name = "custom")
      : a_(std::move(a)), b_(std::move(b)), corrections_(std::move(corrections)), name_(std::move(name)) {
    for (std::size_t i = 0; i < corrections_.size(); ++i) {
      if (corrections_[i].power < 1) throw DomainError("BoundSpec: correction powers must be >= 1");
      if (i > 0 && corrections_[i].power <= corrections_[i - 1].power)
        throw DomainError("BoundSpec: correction powers must be strictly increasing");
    }
  }

  [[nodiscard]] const BigRat& a() const { return a_; }
  [[nodiscard]] const BigRat& b() const { return b_; }
  [[nodiscard]] const std::vector<Correction>& corrections() const { return corrections_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] unsigned max_power() const { return corrections_.empty() ? 0 : corrections_.back().power; }

  /// Same bound with (c, k) added; merges into an existing x^-k term.
  [[nodiscard]] BoundSpec with_correction(const BigRat& c, unsigned k) const {
    std::vector<Correction> out = corrections_;
    auto it = std::find_if(out.begin(), out.end(), [&](const Correction& t) { return t.power >= k; });
    if (it != out.end() && it->power == k) it->coeff += c;
    else out.insert(it, Correction{c, k});
    return {a_, b_, std::move(out), name_};
  }

  [[nodiscard]] RatFunc to_ratfunc() const {
    RatFunc out(Poly({a_, 1}), Poly({b_, 1}));
    for (const auto& [c, k] : corrections_) out = out + RatFunc(Poly::constant(c), Poly::monomial(1, k));
    return out;
  }

  /// bound(1/t) = (1 + a t)/(1 + b t) + sum c_k t^k, truncated.
  [[nodiscard]] QSeries to_series(std::size_t order) const {
    QSeries out(order);
    BigRat geo(1);  // (-b)^j
    for (std::size_t j = 0; j <= order; ++j) {
      out[j] += geo;
      if (j + 1 <= order) out[j + 1] += a_ * geo;
      geo *= -b_;
    }
    for (const auto& [c, k] : corrections_)
      if (k <= order) out[k] += c;
    return out;
  }

  [[nodiscard]] BigRat operator()(const BigRat& x) const {
    BigRat v = (x + a_) / (x + b_);
    for (const auto& [c, k] : corrections_) v += c / pow(x, static_cast<long>(k));
    return v;
  }

  [[nodiscard]] std::string str() const {
    std::string out = "(x + " + a_.str() + ")/(x + " + b_.str() + ")";
    for (const auto& [c, k] : corrections_) {
      out += c.sign() < 0 ? " - " : " + ";
      out += "(" + (c.sign() < 0 ? -c : c).str() + ")/x^" + std::to_string(k);
    }
    return out;
  }

 private:
  BigRat a_;
  BigRat b_;
  std::vector<Correction> corrections_;
  std::string name_;
};

namespace bounds {

inline BigRat optimal_a() { return {5, 12}; }
inline BigRat optimal_b() { return {11, 12}; }

/// (x + 5/12)/(x + 11/12) with no corrections.
inline BoundSpec optimal_rational() { return {optimal_a(), optimal_b(), {}, "rational"}; }

/// u(x): the lower bound.
inline BoundSpec lower() {
  return {optimal_a(),
          optimal_b(),
          {{BigRat(-5, 288), 3}, {BigRat(343, 8640), 4}, {BigRat(-2621, 41472), 5}},
          "u"};
}

/// v(x). AsWritten keeps the x^-5 term twice (merged into one coefficient).
inline BoundSpec upper(Variant variant) {
  const BigRat c5 = variant == Variant::AsWritten ? BigRat(-2 * 2621, 41472) : BigRat(-2621, 41472);
  return {optimal_a(),
          optimal_b(),
          {{BigRat(-5, 288), 3}, {BigRat(343, 8640), 4}, {c5, 5}, {BigRat(300901, 3483648), 6}},
          variant == Variant::AsWritten ? "v(as-written)" : "v(dedup)"};
}

inline BoundSpec for_side(Side side, Variant variant) {
  return side == Side::Lower ? lower() : upper(variant);
}

}  // namespace bounds

}  // namespace eulerbound
