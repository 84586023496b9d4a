#pragma once

// Machine-checked proofs of bounds of the form
//   bound(x) < (1/e)(1 + 1/x)^x   (lower)   or   > ...   (upper)   on [1, inf).
//
// With F(x) = x ln(1 + 1/x) - 1 - ln(bound(x)) the claim is F > 0 (lower) or
// F < 0 (upper). F'' is rational. If F'' has a certified sign on [1, inf) and
// F -> 0 at infinity, then F is strictly monotone towards 0 and the strict
// inequality follows.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eulerbound/enclosure.hpp"
#include "eulerbound/expansion.hpp"
#include "eulerbound/reference_fixtures.hpp"
#include "eulerbound/positivity.hpp"

namespace eulerbound {

enum class Conclusion { Proven, Refuted, Inconclusive };

inline std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::Proven: return "Proven";
    case Conclusion::Refuted: return "Refuted";
    default: return "Inconclusive";
  }
}

struct RefutationWitness {
  BigRat x;
  BigRat bound_value;
  RatInterval enclosure;
};

struct ProofReport {
  BoundSpec bound;
  Side side;
  RatFunc second_derivative;
  std::optional<SignCertificate> certificate;
  bool bound_positive = false;
  bool limit_at_infinity_ok = false;
  Conclusion conclusion = Conclusion::Inconclusive;
  std::optional<RefutationWitness> witness;
};

/// d^2/dx^2 [x ln(1 + 1/x) - 1 - ln u(x)] as an exact rational function.
inline RatFunc log_gap_second_derivative(const BoundSpec& bound) {
  const RatFunc x = Poly::x();
  const RatFunc one(BigRat(1));
  const RatFunc u = bound.to_ratfunc();
  const RatFunc du = derivative(u);
  const RatFunc ddu = derivative(du);
  const RatFunc xlog = -(one / (x * (x + one))) + one / ((x + one) * (x + one));
  return xlog - (ddu * u - du * du) / (u * u);
}

/// Proven only when the certified sign matches the side and the gap vanishes
/// at infinity (and the bound is positive, so its logarithm exists).
inline Conclusion decide_conclusion(Side side, const std::optional<SignCertificate>& cert, bool limit_at_infinity_ok,
                                    bool bound_positive) {
  const int wanted = side == Side::Lower ? 1 : -1;
  if (cert && cert->claimed_sign == wanted && limit_at_infinity_ok && bound_positive) return Conclusion::Proven;
  return Conclusion::Inconclusive;
}

/// Fixed sample grid searched for refutation witnesses, in report order.
inline std::vector<BigRat> refutation_grid() {
  std::vector<BigRat> g = {BigRat(1), BigRat(9, 8), BigRat(5, 4), BigRat(3, 2), BigRat(2), BigRat(3)};
  for (long p = 4; p <= 4096; p *= 2) g.emplace_back(p);
  return g;
}

inline BigRat refutation_width() { return pow10(-40); }

inline std::optional<RefutationWitness> find_refutation(const BoundSpec& bound, Side side) {
  for (const BigRat& x : refutation_grid()) {
    const BigRat bx = bound(x);
    const RatInterval enc = normalized_euler_interval(x, refutation_width());
    const bool violated = side == Side::Lower ? enc.hi() < bx : enc.lo() > bx;
    if (violated) return RefutationWitness{x, bx, enc};
  }
  return std::nullopt;
}

inline ProofReport prove_bound(const BoundSpec& bound, Side side) {
  const BigRat x0(1);
  ProofReport report{bound, side, log_gap_second_derivative(bound), std::nullopt};
  try {
    report.certificate = sign_certificate(report.second_derivative, x0);
  } catch (const DenominatorSignUnknown&) {
    report.certificate = std::nullopt;
  }
  try {
    const auto bcert = sign_certificate(bound.to_ratfunc(), x0);
    report.bound_positive = bcert && bcert->claimed_sign == 1;
  } catch (const DenominatorSignUnknown&) {
    report.bound_positive = false;
  }
  const QSeries bseries = bound.to_series(kDefaultOrder);
  report.limit_at_infinity_ok = bseries[0] == BigRat(1) && log_gap_series(bound)[0].is_zero();
  report.conclusion = decide_conclusion(side, report.certificate, report.limit_at_infinity_ok, report.bound_positive);
  if (report.conclusion != Conclusion::Proven) {
    report.witness = find_refutation(bound, side);
    if (report.witness) report.conclusion = Conclusion::Refuted;
  }
  return report;
}

struct PolyMatch {
  std::string name;
  Poly computed;
  Poly printed;
  bool matches = false;
  /// Per-coefficient equality up to max(deg) + 1 entries.
  std::vector<bool> coefficient_equal;
};

inline PolyMatch compare_polys(std::string name, const Poly& computed, const Poly& printed) {
  PolyMatch m{std::move(name), computed, printed};
  const std::size_t len = static_cast<std::size_t>(std::max(computed.degree(), printed.degree()) + 1);
  m.coefficient_equal.resize(len);
  for (std::size_t k = 0; k < len; ++k) m.coefficient_equal[k] = computed.coeff(k) == printed.coeff(k);
  m.matches = computed == printed;
  return m;
}

/// Recomputes the cleared bound numerator (P for the lower bound, Q for the
/// upper), the denominator shape x^2 (x+1)^2 (12x+11)^2 P^2 and the shifted
/// numerator A (lower) or B (upper), and compares them with the printed ones.
inline std::vector<PolyMatch> match_reference_polynomials(const ProofReport& report) {
  const bool lower = report.side == Side::Lower;
  const Poly bound_num = primitive_part(report.bound.to_ratfunc().num());
  std::vector<PolyMatch> out;
  out.push_back(compare_polys(lower ? "P" : "Q", bound_num, lower ? fixtures::P() : fixtures::Q()));

  const Poly x = Poly::x();
  const Poly xp1({1, 1});
  const Poly lin({11, 12});
  const Poly shape = x * x * xp1 * xp1 * lin * lin * bound_num * bound_num;
  out.push_back(compare_polys("denominator", primitive_part(report.second_derivative.den()), primitive_part(shape)));

  // h * shape must be a polynomial for the printed form to apply.
  const RatFunc scaled = report.second_derivative * RatFunc(shape);
  Poly numerator;
  if (scaled.den().degree() == 0) numerator = scaled.num() * (BigRat(1) / scaled.den().leading());
  if (!lower) numerator = -numerator;
  out.push_back(compare_polys(lower ? "A" : "B", taylor_shift(numerator, BigRat(1)), lower ? fixtures::A() : fixtures::B()));
  return out;
}

/// Versioned plain-text certificate.
inline std::string certificate_text(const ProofReport& report) {
  std::ostringstream os;
  os << "eulerbound-certificate v1\n";
  os << "bound: " << report.bound.name() << " = " << report.bound.str() << "\n";
  os << "side: " << to_string(report.side) << "\n";
  if (report.certificate) {
    const SignCertificate& c = *report.certificate;
    os << "x0: " << c.x0 << "\n";
    os << "multiplicity: " << c.boundary_factor_multiplicity << "\n";
    os << "sign: " << (c.claimed_sign > 0 ? "+1" : "-1") << "\n";
    os << "shifted_poly:";
    for (const auto& v : c.shifted_poly.coeffs()) os << " " << v;
    os << "\n";
    os << "pieces: " << c.pieces.size() << "\n";
    for (const auto& p : c.pieces) {
      os << "piece: [" << p.lo << ", " << (p.hi ? p.hi->str() : std::string("inf")) << "]";
      for (const auto& v : p.transformed.coeffs()) os << " " << v;
      os << "\n";
    }
  } else {
    os << "certificate: none\n";
  }
  os << "bound_positive: " << (report.bound_positive ? "true" : "false") << "\n";
  os << "limit_at_infinity: " << (report.limit_at_infinity_ok ? "0" : "nonzero") << "\n";
  if (report.witness) {
    os << "witness: x=" << report.witness->x << " bound=" << report.witness->bound_value
       << " enclosure=" << report.witness->enclosure << "\n";
  }
  os << "conclusion: " << to_string(report.conclusion) << "\n";
  return os.str();
}

}  // namespace eulerbound
