#pragma once

// Dense univariate polynomials over Q, ascending coefficient order.
// The zero polynomial is the empty coefficient list; otherwise the highest
// stored coefficient is nonzero.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "eulerbound/bigrat.hpp"

namespace eulerbound {

class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<BigRat> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const BigRat& c) { return Poly({c}); }
  /// The monomial c * x^k.
  static Poly monomial(const BigRat& c, std::size_t k) {
    std::vector<BigRat> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return Poly({0, 1}); }

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<BigRat>& coeffs() const { return c_; }
  [[nodiscard]] BigRat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigRat(0); }
  [[nodiscard]] BigRat leading() const { return c_.empty() ? BigRat(0) : c_.back(); }

  [[nodiscard]] BigRat operator()(const BigRat& x) const {
    BigRat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const BigRat& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= BigRat(-1); }
  friend Poly operator*(Poly a, const BigRat& s) { return a *= s; }
  friend Poly operator*(const BigRat& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Human-readable form, e.g. "3*x^2 - 1/2*x + 1".
  [[nodiscard]] std::string str(const char* var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const BigRat& a = c_[k];
      if (a.is_zero()) continue;
      const bool neg = a.sign() < 0;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      const BigRat mag = neg ? -a : a;
      if (k == 0 || mag != BigRat(1)) {
        out += mag.str();
        if (k > 0) out += "*";
      }
      if (k >= 1) out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<BigRat> c_;
};

inline Poly pow(const Poly& p, unsigned e) {
  Poly out = Poly::constant(1);
  Poly base = p;
  while (e > 0) {
    if (e & 1U) out *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return out;
}

/// Euclidean division; returns {quotient, remainder}.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<BigRat> r = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<BigRat> q(static_cast<std::size_t>(a.degree() - db + 1));
  const BigRat lead = b.leading();
  for (long k = a.degree() - db; k >= 0; --k) {
    const BigRat f = r[static_cast<std::size_t>(k + db)] / lead;
    q[static_cast<std::size_t>(k)] = f;
    if (f.is_zero()) continue;
    for (long j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

inline Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (BigRat(1) / p.leading());
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline Poly derivative(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<BigRat> out(static_cast<std::size_t>(p.degree()));
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) out[k - 1] = p.coeffs()[k] * BigRat(static_cast<long>(k));
  return Poly(std::move(out));
}

/// q with q(t) = p(t + c).
inline Poly taylor_shift(const Poly& p, const BigRat& c) {
  const auto& a = p.coeffs();
  const std::size_t n = a.size();
  std::vector<BigRat> q(n);
  // Horner: q <- q * (t + c) + a_k, with q held in q[0..n-1-k].
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t len = n - 1 - k;  // current degree of q
    for (std::size_t j = len; j > 0; --j) q[j] = q[j - 1] + c * q[j];
    q[0] = c * q[0] + a[k];
  }
  return Poly(std::move(q));
}

/// p(s * x).
inline Poly scale_argument(const Poly& p, const BigRat& s) {
  std::vector<BigRat> out = p.coeffs();
  BigRat f(1);
  for (auto& v : out) {
    v *= f;
    f *= s;
  }
  return Poly(std::move(out));
}

/// x^deg * p(1/x) for deg >= degree(p).
inline Poly reverse(const Poly& p, std::size_t deg) {
  std::vector<BigRat> out(deg + 1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) out[deg - k] = p.coeffs()[k];
  return Poly(std::move(out));
}

/// Largest m with (x - x0)^m dividing p, and the cofactor.
inline std::pair<unsigned, Poly> strip_root(Poly p, const BigRat& x0) {
  unsigned m = 0;
  if (p.is_zero()) return {0, p};
  const Poly lin({-x0, 1});
  while (p(x0).is_zero()) {
    p = divmod(p, lin).first;
    ++m;
  }
  return {m, p};
}

/// Smallest positive integer scaling that clears all denominators.
inline BigInt denominator_lcm(const Poly& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  return l;
}

/// Integer polynomial proportional to p with coprime coefficients and
/// positive leading coefficient.
inline Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Poly q = p * BigRat(denominator_lcm(p));
  BigInt g = 0;
  for (const auto& c : q.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
  if (q.leading().sign() < 0) g = -g;
  return q * BigRat(BigInt(1), g);
}

/// Square-free factorization (Yun): p = lc * prod_i f_i^i, f_i monic, pairwise
/// coprime. Returns {f_1, f_2, ...}, trailing constant factors included as 1.
inline std::vector<Poly> squarefree_factors(const Poly& p) {
  std::vector<Poly> out;
  if (p.degree() < 1) return out;
  Poly a = monic(p);
  Poly b = derivative(a);
  Poly c = gcd(a, b);
  Poly w = divmod(a, c).first;
  Poly y = divmod(b, c).first;
  Poly z = y - derivative(w);
  while (w.degree() > 0) {
    Poly g = gcd(w, z);
    out.push_back(g);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - derivative(w);
  }
  return out;
}

}  // namespace eulerbound
