#pragma once

// Truncated formal power series in t = 1/x, generic over the coefficient
// ring (BigRat or ParamPoly). A series of order T carries the coefficients
// of t^0 .. t^T and arithmetic never reads past T.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eulerbound/param_poly.hpp"

namespace eulerbound {

template <typename C>
concept SeriesCoefficient = requires(C a, C b, BigRat s) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { a * s } -> std::convertible_to<C>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

template <SeriesCoefficient C>
class Series {
 public:
  explicit Series(std::size_t order) : c_(order + 1, C(0)) {}
  Series(std::size_t order, std::vector<C> coeffs) : c_(std::move(coeffs)) { c_.resize(order + 1, C(0)); }

  [[nodiscard]] std::size_t order() const { return c_.size() - 1; }
  [[nodiscard]] const C& operator[](std::size_t k) const { return c_.at(k); }
  C& operator[](std::size_t k) { return c_.at(k); }
  [[nodiscard]] const std::vector<C>& coeffs() const { return c_; }

  [[nodiscard]] Series truncated(std::size_t order) const {
    Series out(order);
    for (std::size_t k = 0; k <= std::min(order, this->order()); ++k) out.c_[k] = c_[k];
    return out;
  }

  friend Series operator+(const Series& x, const Series& y) {
    Series out(std::min(x.order(), y.order()));
    for (std::size_t k = 0; k <= out.order(); ++k) out.c_[k] = x.c_[k] + y.c_[k];
    return out;
  }
  friend Series operator-(const Series& x, const Series& y) {
    Series out(std::min(x.order(), y.order()));
    for (std::size_t k = 0; k <= out.order(); ++k) out.c_[k] = x.c_[k] - y.c_[k];
    return out;
  }
  friend Series operator*(const Series& x, const Series& y) {
    Series out(std::min(x.order(), y.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
      if (is_zero(x.c_[i])) continue;
      for (std::size_t j = 0; i + j <= out.order(); ++j) out.c_[i + j] = out.c_[i + j] + x.c_[i] * y.c_[j];
    }
    return out;
  }
  friend Series operator*(const Series& x, const BigRat& s) {
    Series out(x.order());
    for (std::size_t k = 0; k <= x.order(); ++k) out.c_[k] = x.c_[k] * s;
    return out;
  }
  friend bool operator==(const Series& x, const Series& y) { return x.c_ == y.c_; }

 private:
  std::vector<C> c_;
};

using QSeries = Series<BigRat>;
using ParamSeries = Series<ParamPoly>;

/// ln(1 + t): coefficient of t^k is (-1)^(k+1)/k.
inline QSeries series_log1p(std::size_t order) {
  if (order < 1) throw DomainError("series_log1p: order must be >= 1");
  QSeries out(order);
  for (std::size_t k = 1; k <= order; ++k)
    out[k] = BigRat(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
  return out;
}

/// Substitutes t -> s*t, i.e. multiplies the t^k coefficient by s^k.
template <SeriesCoefficient C, typename S>
Series<C> scale_variable(const Series<BigRat>& f, const S& s) {
  Series<C> out(f.order());
  C power(1);
  for (std::size_t k = 0; k <= f.order(); ++k) {
    out[k] = power * f[k];
    power = power * C(s);
  }
  return out;
}

/// exp(s) truncated at `order`, via E' = s' E:  e_k = (1/k) sum_{j=1..k} j s_j e_{k-j}.
template <SeriesCoefficient C>
Series<C> series_exp_compose(const Series<C>& s, std::size_t order) {
  if (!is_zero(s[0])) throw NonzeroConstantTerm("series_exp_compose: constant term must vanish");
  Series<C> out(order);
  out[0] = C(1);
  for (std::size_t k = 1; k <= order; ++k) {
    C acc(0);
    for (std::size_t j = 1; j <= k && j <= s.order(); ++j)
      acc = acc + s[j] * out[k - j] * BigRat(static_cast<long>(j));
    out[k] = acc * BigRat(1, static_cast<long>(k));
  }
  return out;
}

/// ln(s) for a series with constant term exactly 1, via L' = s'/s.
template <SeriesCoefficient C>
Series<C> series_log(const Series<C>& s) {
  if (!(s[0] == C(1))) throw DomainError("series_log: constant term must be 1");
  const std::size_t order = s.order();
  // With s = 1 + r:  k l_k = k r_k - sum_{j=1..k-1} j l_j r_{k-j}.
  Series<C> out(order);
  for (std::size_t k = 1; k <= order; ++k) {
    C acc = s[k] * BigRat(static_cast<long>(k));
    for (std::size_t j = 1; j < k; ++j) acc = acc - out[j] * s[k - j] * BigRat(static_cast<long>(j));
    out[k] = acc * BigRat(1, static_cast<long>(k));
  }
  return out;
}

/// "p/q" strings in ascending order.
inline std::vector<std::string> serialize(const QSeries& s) {
  std::vector<std::string> out;
  out.reserve(s.order() + 1);
  for (const auto& c : s.coeffs()) out.push_back(c.str());
  return out;
}

}  // namespace eulerbound
