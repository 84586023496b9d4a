#pragma once

// Decimal and CSV rendering of exact values. Truncation direction is explicit
// so printed digits never claim more than the underlying rationals support.

#include <string>
#include <vector>

#include "eulerbound/interval.hpp"

namespace eulerbound {

enum class Rounding { TowardZero, Down, Up };

/// `digits` decimals of q, truncated in the given direction.
inline std::string decimal(const BigRat& q, unsigned digits, Rounding mode = Rounding::TowardZero) {
  const BigRat scaled = q * pow10(static_cast<long>(digits));
  BigInt v;
  switch (mode) {
    case Rounding::Down: v = floor(scaled); break;
    case Rounding::Up: v = ceil(scaled); break;
    default: v = q.sign() < 0 ? ceil(scaled) : floor(scaled); break;
  }
  const bool neg = v < 0 || (v == 0 && q.sign() < 0 && mode != Rounding::Up);
  BigInt mag = v < 0 ? BigInt(-v) : v;
  std::string s = mag.get_str(10);
  if (digits == 0) return (neg && mag != 0 ? "-" : "") + s;
  if (s.size() <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
  s.insert(s.size() - digits, ".");
  return (neg ? "-" : "") + s;
}

/// "0.041666 (=1/24)"; the exact form is omitted for integers.
inline std::string render_value(const BigRat& q, unsigned digits) {
  if (q.is_integer()) return q.str();
  return decimal(q, digits) + " (=" + q.str() + ")";
}

/// Outward-rounded "lo,hi".
inline std::string render_interval_csv(const RatInterval& x, unsigned digits) {
  return decimal(x.lo(), digits, Rounding::Down) + "," + decimal(x.hi(), digits, Rounding::Up);
}

/// Outward-rounded "[lo, hi]".
inline std::string render_interval(const RatInterval& x, unsigned digits) {
  return "[" + decimal(x.lo(), digits, Rounding::Down) + ", " + decimal(x.hi(), digits, Rounding::Up) + "]";
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace eulerbound
