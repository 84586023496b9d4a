#pragma once

// Polynomials in two symbolic parameters a, b over Q, stored sparsely.

#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "eulerbound/poly.hpp"

namespace eulerbound {

class ParamPoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;  // (power of a, power of b)

  ParamPoly() = default;
  ParamPoly(const BigRat& c) { add_term(0, 0, c); }  // NOLINT(google-explicit-constructor)
  ParamPoly(long c) : ParamPoly(BigRat(c)) {}  // NOLINT(google-explicit-constructor)

  static ParamPoly a() { return term(1, 0, 1); }
  static ParamPoly b() { return term(0, 1, 1); }
  static ParamPoly term(unsigned i, unsigned j, const BigRat& c) {
    ParamPoly p;
    p.add_term(i, j, c);
    return p;
  }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<Exponents, BigRat>& terms() const { return terms_; }
  [[nodiscard]] BigRat coeff(unsigned i, unsigned j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? BigRat(0) : it->second;
  }

  void add_term(unsigned i, unsigned j, const BigRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ParamPoly& operator+=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }
  ParamPoly& operator-=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
  }
  friend ParamPoly operator+(ParamPoly x, const ParamPoly& y) { return x += y; }
  friend ParamPoly operator-(ParamPoly x, const ParamPoly& y) { return x -= y; }
  friend ParamPoly operator-(const ParamPoly& x) { return ParamPoly() - x; }
  friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
    ParamPoly out;
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_) out.add_term(ex.first + ey.first, ex.second + ey.second, cx * cy);
    return out;
  }
  friend ParamPoly operator*(const ParamPoly& x, const BigRat& s) {
    ParamPoly out;
    for (const auto& [e, c] : x.terms_) out.add_term(e.first, e.second, c * s);
    return out;
  }
  friend bool operator==(const ParamPoly& x, const ParamPoly& y) { return x.terms_ == y.terms_; }

  [[nodiscard]] BigRat evaluate(const BigRat& av, const BigRat& bv) const {
    BigRat acc;
    for (const auto& [e, c] : terms_) acc += c * pow(av, e.first) * pow(bv, e.second);
    return acc;
  }

  /// Substitutes b := sub(a), leaving a univariate polynomial in a.
  [[nodiscard]] Poly substitute_b(const Poly& sub) const {
    Poly out;
    for (const auto& [e, c] : terms_) out += Poly::monomial(c, e.first) * pow(sub, e.second);
    return out;
  }

  /// Lexicographically sorted (i, j, "p/q") triples.
  [[nodiscard]] std::vector<std::tuple<unsigned, unsigned, std::string>> triples() const {
    std::vector<std::tuple<unsigned, unsigned, std::string>> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.emplace_back(e.first, e.second, c.str());
    return out;
  }

  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // highest total degree first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool neg = c.sign() < 0;
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      const BigRat mag = neg ? -c : c;
      std::string mono;
      if (e.first > 0) mono += e.first == 1 ? "a" : "a^" + std::to_string(e.first);
      if (e.second > 0) mono += std::string(mono.empty() ? "" : "*") + (e.second == 1 ? "b" : "b^" + std::to_string(e.second));
      if (mono.empty()) out += mag.str();
      else if (mag == BigRat(1)) out += mono;
      else out += mag.str() + "*" + mono;
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

 private:
  std::map<Exponents, BigRat> terms_;
};

inline bool is_zero(const ParamPoly& p) { return p.is_zero(); }
inline bool is_zero(const BigRat& r) { return r.is_zero(); }

}  // namespace eulerbound
