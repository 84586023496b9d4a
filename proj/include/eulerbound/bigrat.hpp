#pragma once

// Arbitrary-precision rational scalar. Storage is GMP's mpq_t, which keeps
// values canonical (den > 0, gcd(num, den) = 1, zero as 0/1) after every
// arithmetic operation; the constructors below canonicalize explicitly.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "eulerbound/errors.hpp"

namespace eulerbound {

using BigInt = mpz_class;

class BigRat {
 public:
  BigRat() = default;
  BigRat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRat(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("BigRat: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  BigRat(long num, long den) : BigRat(BigInt(num), BigInt(den)) {}
  explicit BigRat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p/q" or "p" with optional leading '-' on the numerator.
  static BigRat parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational");
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view s, bool allow_sign) {
      if (s.empty()) throw ParseError("malformed rational: " + std::string(text));
      std::size_t i = 0;
      if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
      if (i == s.size()) throw ParseError("malformed rational: " + std::string(text));
      for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw ParseError("malformed rational: " + std::string(text));
      std::string digits(s[0] == '+' ? s.substr(1) : s);
      return BigInt(digits, 10);
    };
    if (slash == std::string_view::npos) return BigRat(parse_int(text, true));
    BigInt num = parse_int(text.substr(0, slash), true);
    BigInt den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw ParseError("zero denominator: " + std::string(text));
    return BigRat(num, den);
  }

  [[nodiscard]] BigInt num() const { return q_.get_num(); }
  [[nodiscard]] BigInt den() const { return q_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return q_; }

  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }

  /// Canonical "p/q" text; integers render without a denominator.
  [[nodiscard]] std::string str() const { return q_.get_str(10); }

  /// Not part of any trusted path; display and test diagnostics only.
  [[nodiscard]] double to_double() const { return q_.get_d(); }

  BigRat& operator+=(const BigRat& o) { q_ += o.q_; return *this; }
  BigRat& operator-=(const BigRat& o) { q_ -= o.q_; return *this; }
  BigRat& operator*=(const BigRat& o) { q_ *= o.q_; return *this; }
  BigRat& operator/=(const BigRat& o) {
    if (o.is_zero()) throw DomainError("BigRat: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
  friend BigRat operator-(const BigRat& a) { return BigRat(mpq_class(-a.q_)); }

  friend bool operator==(const BigRat& a, const BigRat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

inline BigRat abs(const BigRat& r) { return r.sign() < 0 ? -r : r; }

/// r^e for any integer e (negative exponents invert).
inline BigRat pow(const BigRat& r, long e) {
  if (e < 0) {
    if (r.is_zero()) throw DomainError("pow: zero to a negative power");
    return pow(BigRat(1) / r, -e);
  }
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), static_cast<unsigned long>(e));
  return BigRat(n, d);
}

inline BigInt floor(const BigRat& r) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return out;
}

inline BigInt ceil(const BigRat& r) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return out;
}

/// Exact k-th root when num and den are both perfect k-th powers.
inline bool exact_root(const BigRat& r, unsigned long k, BigRat& out) {
  if (r.sign() < 0 && k % 2 == 0) return false;
  BigInt n, d;
  BigInt an = r.num();
  if (an < 0) an = -an;
  if (mpz_root(n.get_mpz_t(), an.get_mpz_t(), k) == 0) return false;
  if (mpz_root(d.get_mpz_t(), r.den().get_mpz_t(), k) == 0) return false;
  out = BigRat(r.sign() < 0 ? BigInt(-n) : n, d);
  return true;
}

inline BigRat pow10(long e) { return pow(BigRat(10), e); }

inline BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace eulerbound
