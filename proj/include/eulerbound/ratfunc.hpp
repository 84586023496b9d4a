#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "eulerbound/poly.hpp"

namespace eulerbound {

/// Quotient of polynomials in canonical form: gcd(num, den) = 1 and den monic.
/// Structural equality is therefore value equality.
class RatFunc {
 public:
  RatFunc() : den_(Poly::constant(1)) {}
  RatFunc(const Poly& p) : num_(p), den_(Poly::constant(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const BigRat& c) : RatFunc(Poly::constant(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("RatFunc: zero denominator");
    normalize();
  }

  [[nodiscard]] const Poly& num() const { return num_; }
  [[nodiscard]] const Poly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

  [[nodiscard]] BigRat operator()(const BigRat& x) const {
    const BigRat d = den_(x);
    if (d.is_zero()) throw PoleError("rational function has a pole at x = " + x.str());
    return num_(x) / d;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RatFunc operator-(const RatFunc& a) { return {-a.num_, a.den_}; }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DomainError("RatFunc: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  [[nodiscard]] std::string str() const {
    if (den_.degree() == 0) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.str(); }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly::constant(1);
      return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    const BigRat lead = den_.leading();
    if (lead != BigRat(1)) {
      const BigRat inv = BigRat(1) / lead;
      num_ *= inv;
      den_ *= inv;
    }
  }

  Poly num_;
  Poly den_;
};

/// Quotient-rule derivative.
inline RatFunc derivative(const RatFunc& r) {
  return {derivative(r.num()) * r.den() - r.num() * derivative(r.den()), r.den() * r.den()};
}

/// r(x + c).
inline RatFunc taylor_shift(const RatFunc& r, const BigRat& c) {
  return {taylor_shift(r.num(), c), taylor_shift(r.den(), c)};
}

/// Limit as x -> +infinity when numerator and denominator have equal degree.
inline BigRat leading_ratio(const RatFunc& r) {
  if (r.num().degree() != r.den().degree())
    throw DegreeMismatch("leading_ratio: numerator degree " + std::to_string(r.num().degree()) +
                         " differs from denominator degree " + std::to_string(r.den().degree()));
  return r.num().leading() / r.den().leading();
}

}  // namespace eulerbound
