#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <utility>

#include "eulerbound/bigrat.hpp"

namespace eulerbound {

/// Closed interval [lo, hi] with exact rational endpoints.
class RatInterval {
 public:
  RatInterval() = default;
  RatInterval(const BigRat& point) : lo_(point), hi_(point) {}  // NOLINT(google-explicit-constructor)
  RatInterval(BigRat lo, BigRat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw DomainError("RatInterval: lo > hi");
  }
  static RatInterval hull(const BigRat& x, const BigRat& y) { return x <= y ? RatInterval(x, y) : RatInterval(y, x); }

  [[nodiscard]] const BigRat& lo() const { return lo_; }
  [[nodiscard]] const BigRat& hi() const { return hi_; }
  [[nodiscard]] BigRat width() const { return hi_ - lo_; }
  [[nodiscard]] BigRat midpoint() const { return (lo_ + hi_) / BigRat(2); }
  [[nodiscard]] bool is_point() const { return lo_ == hi_; }
  [[nodiscard]] bool contains(const BigRat& x) const { return lo_ <= x && x <= hi_; }
  [[nodiscard]] bool contains(const RatInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  /// Largest absolute value over the interval.
  [[nodiscard]] BigRat magnitude() const { return std::max(abs(lo_), abs(hi_)); }

  friend RatInterval operator+(const RatInterval& x, const RatInterval& y) { return {x.lo_ + y.lo_, x.hi_ + y.hi_}; }
  friend RatInterval operator-(const RatInterval& x, const RatInterval& y) { return {x.lo_ - y.hi_, x.hi_ - y.lo_}; }
  friend RatInterval operator-(const RatInterval& x) { return {-x.hi_, -x.lo_}; }
  friend RatInterval operator*(const RatInterval& x, const RatInterval& y) {
    if (x.is_point() && y.is_point()) return RatInterval(x.lo_ * y.lo_);
    const BigRat p[4] = {x.lo_ * y.lo_, x.lo_ * y.hi_, x.hi_ * y.lo_, x.hi_ * y.hi_};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
  }
  RatInterval& operator+=(const RatInterval& o) { return *this = *this + o; }

  friend bool operator==(const RatInterval&, const RatInterval&) = default;

  friend std::ostream& operator<<(std::ostream& os, const RatInterval& r) {
    return os << "[" << r.lo_ << ", " << r.hi_ << "]";
  }

 private:
  BigRat lo_;
  BigRat hi_;
};

/// Rounds endpoints outward onto the grid 2^-bits.
inline RatInterval round_outward(const RatInterval& x, unsigned long bits) {
  BigInt scale = 1;
  scale <<= bits;
  const BigRat s(scale);
  return {BigRat(floor(x.lo() * s), scale), BigRat(ceil(x.hi() * s), scale)};
}

/// Bits b with 2^-b <= w.
inline unsigned long bits_for_width(const BigRat& w) {
  if (w.sign() <= 0) throw DomainError("width must be positive");
  const BigInt inv = ceil(BigRat(1) / w);
  return mpz_sizeinbase(inv.get_mpz_t(), 2);
}

/// Enclosure of q^(1/k) for q >= 0 with width at most 2^-bits.
inline RatInterval nth_root_interval(const BigRat& q, unsigned long k, unsigned long bits) {
  if (q.sign() < 0) throw DomainError("nth_root_interval: negative radicand");
  if (k == 0) throw DomainError("nth_root_interval: k must be >= 1");
  BigRat exact;
  if (exact_root(q, k, exact)) return RatInterval(exact);
  // (r 2^bits)^k = q 2^(k bits) lies in [M, M + 1) with M = floor(q 2^(k bits)).
  BigInt scaled = q.num();
  scaled <<= k * bits;
  BigInt m;
  mpz_fdiv_q(m.get_mpz_t(), scaled.get_mpz_t(), q.den().get_mpz_t());
  BigInt r;
  mpz_root(r.get_mpz_t(), m.get_mpz_t(), k);
  BigInt scale = 1;
  scale <<= bits;
  return {BigRat(r, scale), BigRat(BigInt(r + 1), scale)};
}

}  // namespace eulerbound
