#pragma once

// Integer polynomials printed alongside the convexity proof, ascending order.
// The f'' and g'' numerators are A(x - 1) and -B(x - 1) over
// x^2 (x+1)^2 (12x+11)^2 P(x)^2 and ... Q(x)^2 respectively.

#include <string>
#include <vector>

#include "eulerbound/poly.hpp"

namespace eulerbound::fixtures {

inline Poly from_decimal(const std::vector<std::string>& ascending) {
  std::vector<BigRat> c;
  c.reserve(ascending.size());
  for (const auto& s : ascending) c.emplace_back(BigRat::parse(s));
  return Poly(std::move(c));
}

/// Numerator of u, cleared.
inline Poly P() { return from_decimal({"-144155", "-66708", "59184", "-43200", "0", "1036800", "2488320"}); }

/// Numerator of v, cleared.
inline Poly Q() {
  return from_decimal({"16549555", "5945040", "-5603472", "4971456", "-3628800", "0", "87091200", "209018880"});
}

inline Poly A() {
  return from_decimal({"48685659681079707", "387888768643091163", "1374068561183884363", "2856411438418498368",
                       "3861333058156847712", "3547125026642062080", "2242448726942859264", "963345615805707264",
                       "269162452894408704", "44174729709158400", "3234548057702400"});
}

inline Poly B() {
  return from_decimal({"621810333384191039953", "5495336279092271136793", "22015820845590210733374",
                       "52587526363654958754048", "83107983906845638539984", "91197790053279643410048",
                       "70886916929730329339904", "39022307420738572320768", "14907444982230536515584",
                       "3763807019677591584768", "565244311814774194176", "38255330631116390400"});
}

/// Leading coefficients shown for the Keller sandwich numerators (degree 13
/// then 11) and the denominator constant 17418240.
struct SandwichDisplay {
  std::string name;
  std::vector<std::string> leading;  // from the top degree downward
  long n_power;
  long n_minus_one_power;
};

inline BigInt sandwich_denominator_constant() { return 17418240; }

inline std::vector<SandwichDisplay> sandwich_displays() {
  return {
      {"(n+1)u(n) - n v(n-1)", {"2508226560", "-12959170560"}, 5, 6},
      {"(n+1)v(n) - n u(n-1)", {"2508226560", "-10450944000"}, 6, 5},
      {"n^2((n+1)u(n) - n v(n-1) - 1)", {"104509440", "-539965440"}, 3, 6},
      // printed as "+-435456000"; the sign is read as negative
      {"n^2((n+1)v(n) - n u(n-1) - 1)", {"104509440", "-435456000"}, 4, 5},
  };
}

}  // namespace eulerbound::fixtures
