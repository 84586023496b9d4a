#pragma once

// Weighted Carleman inequalities
//   sum_n (a_1 ... a_n)^(1/n)  <=  sum_n w_n a_n
// checked on finite truncations, with the weights
//   Polya:        (1 + 1/n)^n
//   simple:       e (12n + 5)/(12n + 11)
//   refined:      e ((12n + 5)/(12n + 11) - eps_n)
//   classical:    e
// and the general weighted form w_n = c_n x_n, x_n = sum_{k>=n} 1/(k (c_1...c_k)^(1/k)).

#include <optional>
#include <string>
#include <vector>

#include "eulerbound/enclosure.hpp"

namespace eulerbound {

enum class SchemeKind { Polya, Theorem3Simple, Theorem3Refined, Classical, Custom };

struct WeightScheme {
  SchemeKind kind = SchemeKind::Polya;
  Variant variant = Variant::Dedup;  // Theorem3Refined only
  std::vector<BigRat> table;         // Custom only: c_1, c_2, ...

  static WeightScheme polya() { return {SchemeKind::Polya}; }
  static WeightScheme simple() { return {SchemeKind::Theorem3Simple}; }
  static WeightScheme refined(Variant v) { return {SchemeKind::Theorem3Refined, v}; }
  static WeightScheme classical() { return {SchemeKind::Classical}; }
  static WeightScheme custom(std::vector<BigRat> c) {
    for (const auto& v : c)
      if (v.sign() <= 0) throw DomainError("custom weights must be strictly positive");
    return {SchemeKind::Custom, Variant::Dedup, std::move(c)};
  }
};

inline std::string to_string(const WeightScheme& s) {
  switch (s.kind) {
    case SchemeKind::Polya: return "polya";
    case SchemeKind::Theorem3Simple: return "simple";
    case SchemeKind::Theorem3Refined: return "refined-" + to_string(s.variant);
    case SchemeKind::Classical: return "classical";
    default: return "custom";
  }
}

/// eps_n; AsWritten counts the 2621/(41472 n^5) term twice.
inline BigRat epsilon(long n, Variant variant) {
  const BigRat x(n);
  BigRat eps = BigRat(5, 288) / pow(x, 3) - BigRat(343, 8640) / pow(x, 4) + BigRat(2621, 41472) / pow(x, 5) -
               BigRat(300901, 3483648) / pow(x, 6);
  if (variant == Variant::AsWritten) eps += BigRat(2621, 41472) / pow(x, 5);
  return eps;
}

/// c_n = (n+1)^n / n^(n-1).
inline BigRat polya_c(long n) { return pow(BigRat(n + 1), n) / pow(BigRat(n), n - 1); }

struct PolyaIdentity {
  long n;
  BigRat product;   // c_1 ... c_n
  BigRat geo_mean;  // (c_1 ... c_n)^(1/n)
  BigRat tail;      // x_n
  BigRat weight;    // c_n x_n
};

namespace detail {

inline PolyaIdentity polya_step(long n, const BigRat& product) {
  BigRat root;
  if (!exact_root(product, static_cast<unsigned long>(n), root))
    throw std::logic_error("Polya product is not a perfect power at n = " + std::to_string(n));
  // With geo_mean_k = k + 1 each tail term is 1/(k(k+1)) = 1/k - 1/(k+1).
  if (root != BigRat(n + 1)) throw std::logic_error("Polya geometric mean differs from n + 1");
  const BigRat tail(1, n);
  return {n, product, root, tail, polya_c(n) * tail};
}

}  // namespace detail

inline PolyaIdentity polya_identities(long n) {
  if (n < 1) throw DomainError("polya_identities: n must be >= 1");
  BigRat product(1);
  for (long k = 1; k <= n; ++k) product *= polya_c(k);
  return detail::polya_step(n, product);
}

/// polya_identities(1..n) sharing the running product.
inline std::vector<PolyaIdentity> polya_identities_upto(long n) {
  std::vector<PolyaIdentity> out;
  BigRat product(1);
  for (long k = 1; k <= n; ++k) {
    product *= polya_c(k);
    out.push_back(detail::polya_step(k, product));
  }
  return out;
}

struct Weight {
  RatInterval value;              // rigorous enclosure of w_n
  std::optional<BigRat> exact;    // w_n when rational
  std::optional<BigRat> over_e;   // w_n / e when rational
};

inline Weight weights(const WeightScheme& scheme, long n, const BigRat& width = default_width()) {
  if (n < 1) throw DomainError("weights: n must be >= 1");
  const BigRat x(n);
  switch (scheme.kind) {
    case SchemeKind::Polya: {
      const BigRat exact = pow(BigRat(n + 1, n), n);
      const RatInterval enc = e_interval(width / BigRat(4)) * normalized_euler_interval(x, width / BigRat(4));
      return {enc, exact, std::nullopt};
    }
    case SchemeKind::Custom: {
      if (static_cast<std::size_t>(n) > scheme.table.size()) throw DomainError("weights: custom table too short");
      const BigRat& c = scheme.table[static_cast<std::size_t>(n - 1)];
      return {RatInterval(c), c, std::nullopt};
    }
    default: break;
  }
  BigRat over_e(1);
  if (scheme.kind != SchemeKind::Classical) over_e = BigRat(12 * n + 5, 12 * n + 11);
  if (scheme.kind == SchemeKind::Theorem3Refined) over_e -= epsilon(n, scheme.variant);
  const RatInterval e = e_interval(width / BigRat(4));
  return {RatInterval(over_e) * e, std::nullopt, over_e};
}

struct ChainLink {
  std::string name;
  bool passed = true;
  std::optional<long> first_failure;
  long undecided = 0;
};

struct ChainReport {
  long N;
  Variant variant;
  std::vector<ChainLink> links;
  std::vector<long> nonpositive_epsilon;
  [[nodiscard]] bool passed() const {
    for (const auto& l : links)
      if (!l.passed) return false;
    return true;
  }
};

/// Checks, for every n <= N,
///   (1/e)(1+1/n)^n <= (12n+5)/(12n+11) - eps_n <= (12n+5)/(12n+11) <= 1,
/// i.e. (1+1/n)^n <= refined weight <= simple weight <= e. The middle link
/// is an improvement claim and is checked where eps_n > 0; indices with
/// eps_n <= 0 are listed in `nonpositive_epsilon` instead.
inline ChainReport termwise_weight_chain(long N, Variant variant) {
  if (N < 1) throw DomainError("termwise_weight_chain: N must be >= 1");
  ChainReport report{N, variant, {{"polya<=refined"}, {"refined<=simple"}, {"simple<=classical"}}, {}};
  auto fail = [](ChainLink& l, long n) {
    l.passed = false;
    if (!l.first_failure) l.first_failure = n;
  };
  for (long n = 1; n <= N; ++n) {
    const BigRat simple(12 * n + 5, 12 * n + 11);
    const BigRat eps = epsilon(n, variant);
    const BigRat refined = simple - eps;
    // Margins shrink like n^-7; refine the enclosure until it separates.
    Outcome o = Outcome::Undecided;
    for (long digits = 30; digits <= 120 && o == Outcome::Undecided; digits *= 2) {
      const RatInterval enc = normalized_euler_interval(BigRat(n), pow10(-digits));
      if (enc.hi() <= refined) o = Outcome::Holds;
      else if (enc.lo() > refined) o = Outcome::Fails;
    }
    if (o == Outcome::Fails) fail(report.links[0], n);
    if (o == Outcome::Undecided) {
      report.links[0].passed = false;
      ++report.links[0].undecided;
    }
    // Improvement is only claimed where eps_n > 0; other n are flagged.
    if (eps.sign() <= 0) report.nonpositive_epsilon.push_back(n);
    else if (refined >= simple) fail(report.links[1], n);
    if (simple > BigRat(1)) fail(report.links[2], n);
  }
  return report;
}

enum class SequenceKind { Geometric, PowerLaw, Custom };

/// a_n: r^n, n^-p, or a finite positive list.
struct TestSequence {
  SequenceKind kind = SequenceKind::Geometric;
  BigRat ratio;
  long exponent = 2;
  std::vector<BigRat> values;

  static TestSequence geometric(const BigRat& r) {
    if (r.sign() <= 0 || r >= BigRat(1)) throw DomainError("geometric ratio must lie in (0, 1)");
    return {SequenceKind::Geometric, r};
  }
  /// Integer exponents keep every term rational.
  static TestSequence power_law(long p) {
    if (p < 2) throw DomainError("power-law exponent must be an integer >= 2");
    return {SequenceKind::PowerLaw, BigRat(0), p};
  }
  static TestSequence custom(std::vector<BigRat> v) {
    for (const auto& x : v)
      if (x.sign() <= 0) throw DomainError("custom sequence terms must be positive");
    return {SequenceKind::Custom, BigRat(0), 0, std::move(v)};
  }

  [[nodiscard]] BigRat operator()(long n) const {
    switch (kind) {
      case SequenceKind::Geometric: return pow(ratio, n);
      case SequenceKind::PowerLaw: return pow(BigRat(n), -exponent);
      default:
        if (n < 1 || static_cast<std::size_t>(n) > values.size()) throw DomainError("custom sequence index out of range");
        return values[static_cast<std::size_t>(n - 1)];
    }
  }

  /// Upper bound on sum_{n>N} a_n; nullopt for custom lists (finite, so 0
  /// past their length).
  [[nodiscard]] std::optional<BigRat> remainder_bound(long N) const {
    switch (kind) {
      case SequenceKind::Geometric: return pow(ratio, N + 1) / (BigRat(1) - ratio);
      case SequenceKind::PowerLaw: return pow(BigRat(N), 1 - exponent) / BigRat(exponent - 1);
      default: return std::nullopt;
    }
  }

  [[nodiscard]] std::string str() const {
    switch (kind) {
      case SequenceKind::Geometric: return "geometric(" + ratio.str() + ")";
      case SequenceKind::PowerLaw: return "power(" + std::to_string(exponent) + ")";
      default: return "custom(" + std::to_string(values.size()) + ")";
    }
  }
};

/// Enclosures of the geometric means (a_1...a_n)^(1/n), n = 1..N.
inline std::vector<RatInterval> geometric_means(const TestSequence& seq, long N, const BigRat& width) {
  const unsigned long bits = bits_for_width(width) + 4;
  std::vector<RatInterval> out;
  out.reserve(static_cast<std::size_t>(N));
  BigRat product(1);
  for (long n = 1; n <= N; ++n) {
    product *= seq(n);
    out.push_back(nth_root_interval(product, static_cast<unsigned long>(n), bits));
  }
  return out;
}

/// Finite-N truncations of both sides.
struct CarlemanSums {
  long N;
  RatInterval lhs;
  RatInterval rhs;
  [[nodiscard]] bool holds() const { return lhs.hi() <= rhs.lo(); }
};

inline CarlemanSums carleman_sums(const TestSequence& seq, const WeightScheme& scheme, long N,
                                  const BigRat& width = default_width()) {
  if (N < 1) throw DomainError("carleman_sums: N must be >= 1");
  if (scheme.kind == SchemeKind::Custom) throw DomainError("carleman_sums: custom weights go through theorem2_bound");
  const BigRat term_width = width / BigRat(N);
  RatInterval lhs(BigRat(0));
  for (const auto& g : geometric_means(seq, N, term_width)) lhs += g;
  // e is shared; rational weights factor through it.
  const RatInterval e = e_interval(width / BigRat(4));
  BigRat exact_part(0);
  BigRat over_e_part(0);
  for (long n = 1; n <= N; ++n) {
    const BigRat a = seq(n);
    switch (scheme.kind) {
      case SchemeKind::Polya: exact_part += pow(BigRat(n + 1, n), n) * a; break;
      case SchemeKind::Classical: over_e_part += a; break;
      case SchemeKind::Theorem3Simple: over_e_part += BigRat(12 * n + 5, 12 * n + 11) * a; break;
      default: over_e_part += (BigRat(12 * n + 5, 12 * n + 11) - epsilon(n, scheme.variant)) * a; break;
    }
  }
  const RatInterval rhs = RatInterval(exact_part) + RatInterval(over_e_part) * e;
  return {N, lhs, rhs};
}

/// e * sum_{n>=1} a_n for the infinite kinds: the truncation plus the closed
/// remainder bound.
inline RatInterval classical_rhs_infinite(const TestSequence& seq, long N, const BigRat& width = default_width()) {
  const auto rem = seq.remainder_bound(N);
  const CarlemanSums s = carleman_sums(seq, WeightScheme::classical(), N, width);
  if (!rem) return s.rhs;
  const RatInterval e = e_interval(width / BigRat(4));
  return s.rhs + RatInterval(BigRat(0), *rem) * e;
}

struct CarlemanTail {
  long n;
  RatInterval value;
  bool exact = false;
};

struct Theorem2Result {
  RatInterval rhs;
  std::vector<CarlemanTail> tails;
};

/// sum_{n<=N} c_n x_n a_n for a custom weight table. Tails use the Polya
/// closed form when the table is Polya's; otherwise the finite partial sum up
/// to the table length plus `tail_remainder`, which must enclose the rest.
inline Theorem2Result theorem2_bound(const WeightScheme& custom, const TestSequence& seq, long N,
                                     const std::optional<RatInterval>& tail_remainder = std::nullopt,
                                     const BigRat& width = default_width()) {
  if (custom.kind != SchemeKind::Custom) throw DomainError("theorem2_bound: expects a custom weight table");
  const long L = static_cast<long>(custom.table.size());
  if (N < 1 || L < N) throw DomainError("theorem2_bound: table shorter than N");
  bool is_polya = true;
  for (long k = 1; k <= L && is_polya; ++k) is_polya = custom.table[static_cast<std::size_t>(k - 1)] == polya_c(k);

  std::vector<CarlemanTail> tails;
  if (is_polya) {
    for (long n = 1; n <= N; ++n) tails.push_back({n, RatInterval(BigRat(1, n)), true});
  } else {
    if (!tail_remainder) throw MissingTailBound("no closed-form tail; supply a remainder bound for sum_{k>L}");
    if (tail_remainder->lo().sign() < 0) throw DomainError("tail remainder must be nonnegative");
    const unsigned long bits = bits_for_width(width / BigRat(L)) + 4;
    // terms[k-1] encloses 1/(k G_k)
    std::vector<RatInterval> terms;
    BigRat product(1);
    bool all_exact = tail_remainder->is_point();
    for (long k = 1; k <= L; ++k) {
      product *= custom.table[static_cast<std::size_t>(k - 1)];
      const RatInterval g = nth_root_interval(product, static_cast<unsigned long>(k), bits);
      all_exact = all_exact && g.is_point();
      const BigRat kk(k);
      terms.emplace_back(BigRat(1) / (kk * g.hi()), BigRat(1) / (kk * g.lo()));
    }
    RatInterval suffix = *tail_remainder;
    std::vector<CarlemanTail> rev;
    for (long n = L; n >= 1; --n) {
      suffix += terms[static_cast<std::size_t>(n - 1)];
      if (n <= N) rev.push_back({n, suffix, all_exact});
    }
    tails.assign(rev.rbegin(), rev.rend());
  }

  RatInterval rhs(BigRat(0));
  for (long n = 1; n <= N; ++n) {
    const BigRat ca = custom.table[static_cast<std::size_t>(n - 1)] * seq(n);
    rhs += RatInterval(ca) * tails[static_cast<std::size_t>(n - 1)].value;
  }
  return {rhs, tails};
}

}  // namespace eulerbound
