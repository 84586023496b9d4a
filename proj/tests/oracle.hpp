#pragma once

// Independent floating oracle: 100 decimal digits via boost::multiprecision.

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "eulerbound/bigrat.hpp"
#include "eulerbound/interval.hpp"

namespace oracle {

using Dec = boost::multiprecision::cpp_dec_float_100;

inline Dec to_dec(const eulerbound::BigRat& q) { return Dec(q.num().get_str()) / Dec(q.den().get_str()); }

/// (1/e)(1 + 1/n)^n computed as exp(n log1p(1/n) - 1).
inline Dec normalized_euler(long n) {
  const Dec nn(n);
  return exp(nn * boost::multiprecision::log1p(Dec(1) / nn) - Dec(1));
}

/// Containment up to a slack far below any enclosure width under test.
inline bool encloses(const eulerbound::RatInterval& x, const Dec& v, const Dec& slack = Dec("1e-80")) {
  return to_dec(x.lo()) - slack <= v && v <= to_dec(x.hi()) + slack;
}

}  // namespace oracle
