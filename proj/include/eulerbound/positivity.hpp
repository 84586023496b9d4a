#pragma once

// Sign certificates for polynomials and rational functions on [x0, infinity).
//
// The basic certificate: strip the largest power (x - x0)^m, substitute
// x -> x + x0, and observe that every coefficient of the result carries one
// sign. When that fails, [x0, x0 + 2^k] is bisected with Descartes-style
// checks on each piece and the tail [x0 + 2^k, infinity) gets its own shift
// certificate. A failed search returns nothing; it never returns a wrong sign.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulerbound/ratfunc.hpp"

namespace eulerbound {

/// One piece of an escalated certificate. `transformed` has single-signed
/// coefficients: the Taylor shift for the unbounded tail, or
/// (1 + y)^d p((lo + hi y)/(1 + y)) for a bounded piece.
struct CertificatePiece {
  BigRat lo;
  std::optional<BigRat> hi;  // nullopt: unbounded
  Poly transformed;
};

struct SignCertificate {
  BigRat x0;
  Poly cleared_numerator;
  unsigned boundary_factor_multiplicity = 0;
  Poly shifted_poly;
  int claimed_sign = 0;
  /// Empty for the direct certificate; otherwise covers [x0, infinity).
  std::vector<CertificatePiece> pieces;
};

inline constexpr unsigned kMaxBisectionDepth = 12;

namespace detail {

/// +1 / -1 when all nonzero coefficients share a sign, 0 when mixed or zero.
inline int uniform_sign(const Poly& p) {
  int s = 0;
  for (const auto& c : p.coeffs()) {
    const int cs = c.sign();
    if (cs == 0) continue;
    if (s == 0) s = cs;
    else if (cs != s) return 0;
  }
  return s;
}

/// (1 + y)^d p((lo + hi y)/(1 + y)) with d = deg p.
inline Poly moebius_transform(const Poly& p, const BigRat& lo, const BigRat& hi) {
  const long d = p.degree();
  Poly out;
  const Poly num({lo, hi});
  const Poly den({1, 1});
  for (long i = 0; i <= d; ++i) {
    const BigRat& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    out += pow(num, static_cast<unsigned>(i)) * pow(den, static_cast<unsigned>(d - i)) * c;
  }
  return out;
}

/// Certifies sign s of p on the closed interval [lo, hi], given p(lo) and
/// p(hi) already known to have sign s.
inline bool certify_bounded(const Poly& p, const BigRat& lo, const BigRat& hi, int s, unsigned depth,
                            std::vector<CertificatePiece>& pieces) {
  Poly t = moebius_transform(p, lo, hi);
  if (uniform_sign(t) == s) {
    pieces.push_back({lo, hi, std::move(t)});
    return true;
  }
  if (depth == 0) return false;
  const BigRat mid = (lo + hi) / BigRat(2);
  if (p(mid).sign() != s) return false;
  return certify_bounded(p, lo, mid, s, depth - 1, pieces) && certify_bounded(p, mid, hi, s, depth - 1, pieces);
}

}  // namespace detail

/// Sign certificate for a nonzero polynomial on [x0, infinity): the sign of p
/// is constant and nonzero on (x0, infinity).
inline std::optional<SignCertificate> certify_poly_sign(const Poly& p, const BigRat& x0) {
  if (p.is_zero()) return std::nullopt;
  auto [m, rest] = strip_root(p, x0);
  SignCertificate cert;
  cert.x0 = x0;
  cert.cleared_numerator = p;
  cert.boundary_factor_multiplicity = m;
  cert.shifted_poly = taylor_shift(rest, x0);
  const int direct = detail::uniform_sign(cert.shifted_poly);
  if (direct != 0) {
    cert.claimed_sign = direct;
    return cert;
  }

  // Escalation. The sign on [x0, infinity) must match both rest(x0) and the
  // leading coefficient.
  const int s = rest.leading().sign();
  if (rest(x0).sign() != s) return std::nullopt;
  for (unsigned k = 0; k <= kMaxBisectionDepth; ++k) {
    const BigRat split = x0 + pow(BigRat(2), static_cast<long>(k));
    if (rest(split).sign() != s) continue;
    Poly tail = taylor_shift(rest, split);
    if (detail::uniform_sign(tail) != s) continue;
    std::vector<CertificatePiece> pieces;
    if (!detail::certify_bounded(rest, x0, split, s, kMaxBisectionDepth, pieces)) continue;
    pieces.push_back({split, std::nullopt, std::move(tail)});
    cert.claimed_sign = s;
    cert.pieces = std::move(pieces);
    return cert;
  }
  return std::nullopt;
}

/// Sign of p on [x0, infinity) when p has no root there, via its square-free
/// factors. Returns 0 if any factor cannot be certified root-free.
inline int certified_nonvanishing_sign(const Poly& p, const BigRat& x0) {
  if (p.is_zero()) return 0;
  for (const Poly& f : squarefree_factors(p)) {
    if (f.degree() < 1) continue;
    // f is monic: a root-free f is positive on the whole ray.
    auto c = certify_poly_sign(f, x0);
    if (!c || c->boundary_factor_multiplicity != 0 || c->claimed_sign != 1) return 0;
  }
  return p.leading().sign();
}

/// Certificate for the sign of h = num/den on [x0, infinity). Throws
/// DenominatorSignUnknown if the denominator cannot be certified root-free.
inline std::optional<SignCertificate> sign_certificate(const RatFunc& h, const BigRat& x0) {
  const int den_sign = certified_nonvanishing_sign(h.den(), x0);
  if (den_sign == 0) throw DenominatorSignUnknown("denominator not certified root-free on [" + x0.str() + ", inf)");
  return certify_poly_sign(den_sign > 0 ? h.num() : -h.num(), x0);
}

/// Independent re-check of a certificate's algebra and sign claims.
inline bool verify_certificate(const SignCertificate& c) {
  if (c.shifted_poly.is_zero() || (c.claimed_sign != 1 && c.claimed_sign != -1)) return false;
  const Poly lin({-c.x0, 1});
  const Poly rebuilt = pow(lin, c.boundary_factor_multiplicity) * taylor_shift(c.shifted_poly, -c.x0);
  if (!(rebuilt == c.cleared_numerator)) return false;
  if (c.pieces.empty()) return detail::uniform_sign(c.shifted_poly) == c.claimed_sign;
  const Poly rest = taylor_shift(c.shifted_poly, -c.x0);
  BigRat cursor = c.x0;
  for (const auto& piece : c.pieces) {
    if (piece.lo != cursor || rest(piece.lo).sign() != c.claimed_sign) return false;
    if (detail::uniform_sign(piece.transformed) != c.claimed_sign) return false;
    if (piece.hi) {
      if (!(detail::moebius_transform(rest, piece.lo, *piece.hi) == piece.transformed)) return false;
      cursor = *piece.hi;
    } else {
      return taylor_shift(rest, piece.lo) == piece.transformed;
    }
  }
  return false;
}

}  // namespace eulerbound
