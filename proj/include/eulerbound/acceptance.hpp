#pragma once

// The end-to-end gate: each criterion recomputes its claim from scratch and
// reports one line. Shared by the `verify-all` subcommand and the acceptance
// test binary.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "eulerbound/carleman.hpp"
#include "eulerbound/keller.hpp"
#include "eulerbound/prover.hpp"
#include "eulerbound/render.hpp"

namespace eulerbound::acceptance {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;
};

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title << ": " << r.detail;
  return os.str();
}

inline CriterionResult symbolic_expansion() {
  const ParamSeries w = expand_relative_error();
  const ParamPoly a = ParamPoly::a();
  const ParamPoly b = ParamPoly::b();
  const ParamPoly c1 = -a + b - ParamPoly(BigRat(1, 2));
  const ParamPoly c2 = a * a * BigRat(1, 2) - b * b * BigRat(1, 2) + ParamPoly(BigRat(1, 3));
  const ParamPoly c3 = b * b * b * BigRat(1, 3) - a * a * a * BigRat(1, 3) - ParamPoly(BigRat(1, 4));
  const bool ok = w[0].is_zero() && w[1] == c1 && w[2] == c2 && w[3] == c3;
  return {1, "relative error expansion", ok, "t^1: " + w[1].str() + "; t^2: " + w[2].str() + "; t^3: " + w[3].str()};
}

inline CriterionResult optimum() {
  const OptimalParams p = solve_optimal_params();
  const bool ok = p.a == BigRat(5, 12) && p.b == BigRat(11, 12) && p.residual == BigRat(-5, 288);
  return {2, "optimal parameters", ok, "a=" + p.a.str() + " b=" + p.b.str() + " residual t^3=" + p.residual.str()};
}

inline CriterionResult correction_coefficients() {
  const QSeries bare = expand_bound_gap(bounds::optimal_rational());
  const QSeries with_u = expand_bound_gap(bounds::lower());
  bool vanish = true;
  for (std::size_t k = 0; k <= 5; ++k) vanish = vanish && with_u[k].is_zero();
  const bool ok = bare[3] == BigRat(-5, 288) && bare[4] == BigRat(343, 8640) && vanish;
  return {3, "correction coefficients", ok,
          "bare t^3=" + bare[3].str() + " t^4=" + bare[4].str() + "; u gap t^0..t^5 " +
              (vanish ? "vanish" : "do not vanish") + ", t^6=" + with_u[6].str()};
}

inline CriterionResult proof_certificates() {
  const ProofReport r = prove_bound(bounds::lower(), Side::Lower);
  const auto matches = match_reference_polynomials(r);
  bool p_ok = false;
  bool a_ok = false;
  for (const auto& m : matches) {
    if (m.name == "P") p_ok = m.matches;
    if (m.name == "A") a_ok = m.matches;
  }
  const bool ok = r.conclusion == Conclusion::Proven && p_ok && a_ok && verify_certificate(*r.certificate);
  return {4, "lower bound certificate", ok,
          "u lower " + to_string(r.conclusion) + ", P " + (p_ok ? "matches" : "differs") + ", A " +
              (a_ok ? "matches" : "differs") + " (degree " + std::to_string(r.certificate ? r.certificate->shifted_poly.degree() : -1) + ")"};
}

inline CriterionResult variant_adjudication() {
  const ProofReport as_written = prove_bound(bounds::upper(Variant::AsWritten), Side::Upper);
  const ProofReport dedup = prove_bound(bounds::upper(Variant::Dedup), Side::Upper);
  const CheckResult at1 = check_theorem1_at(BigRat(1), Variant::AsWritten, default_width());
  const bool at1_fails = at1.outcome == Outcome::Fails && at1.failed_side == Side::Upper;
  long first_bad = 0;
  for (long n = 1; n <= 100 && first_bad == 0; ++n)
    if (check_theorem1_at(BigRat(n), Variant::Dedup, default_width()).outcome != Outcome::Holds) first_bad = n;
  const bool ok = as_written.conclusion != Conclusion::Proven && at1_fails && dedup.conclusion == Conclusion::Proven &&
                  first_bad == 0;
  return {5, "upper bound variants", ok,
          "as-written " + to_string(as_written.conclusion) + ", check(1) " + to_string(at1.outcome) +
              (at1.failed_side ? "(" + to_string(*at1.failed_side) + ")" : "") + "; dedup " + to_string(dedup.conclusion) +
              ", n=1..100 " + (first_bad == 0 ? "all Hold" : "fails at n=" + std::to_string(first_bad))};
}

inline CriterionResult classical_inequality() {
  long first_bad = 0;
  for (long n = 1; n <= 1000 && first_bad == 0; ++n)
    if (check_classic_at(n, default_width()).outcome != Outcome::Holds) first_bad = n;
  return {6, "classical double inequality", first_bad == 0,
          first_bad == 0 ? "n=1..1000 all Hold" : "fails at n=" + std::to_string(first_bad)};
}

inline CriterionResult keller_symbolics() {
  const SandwichLimits lim = sandwich_limits(Variant::Dedup);
  const auto displays = match_sandwich_displays(Variant::Dedup);
  const DisplayMatch& lower = displays.front();
  const bool lead_ok = lower.denominator_divides && lower.numerator_degree == 13 && !lower.computed.empty() &&
                       lower.computed[0] == BigRat(2508226560);
  const bool ok = lim.limit == BigRat(1) && lim.rate == BigRat(1, 24) && lead_ok;
  return {7, "Keller sandwich limits", ok,
          "limit=" + lim.limit.str() + " rate=" + lim.rate.str() + "; lower numerator degree " +
              std::to_string(lower.numerator_degree) + " leading " +
              (lower.computed.empty() ? std::string("?") : lower.computed[0].str()) + " over 17418240"};
}

inline CriterionResult keller_numerics() {
  const auto rows = convergence_table({10, 100, 1000}, default_width());
  bool contained = true;
  for (const auto& r : rows) contained = contained && r.contained();
  const BigRat dist = abs(rows.back().scaled.midpoint() - BigRat(1, 24));
  const bool ok = contained && dist <= BigRat(1, 1000);
  return {8, "Keller convergence", ok,
          std::string(contained ? "sandwich contains n^2(x_n-1) at n=10,100,1000" : "containment fails") +
              "; n=1000 midpoint " + decimal(rows.back().scaled.midpoint(), 8) + ", |mid-1/24|=" + decimal(dist, 8)};
}

inline CriterionResult polya() {
  long first_bad = 0;
  for (const auto& id : polya_identities_upto(1000)) {
    const bool ok = id.geo_mean == BigRat(id.n + 1) && id.tail == BigRat(1, id.n) &&
                    id.weight == pow(BigRat(id.n + 1, id.n), id.n);
    if (!ok && first_bad == 0) first_bad = id.n;
  }
  return {9, "Polya identities", first_bad == 0,
          first_bad == 0 ? "geo mean n+1, tail 1/n, weight (1+1/n)^n for n=1..1000"
                         : "fails at n=" + std::to_string(first_bad)};
}

inline CriterionResult carleman_chains() {
  const ChainReport chain = termwise_weight_chain(10000, Variant::Dedup);
  std::string failures;
  const std::vector<TestSequence> seqs = {TestSequence::geometric(BigRat(1, 2)), TestSequence::geometric(BigRat(9, 10)),
                                          TestSequence::power_law(2)};
  const std::vector<WeightScheme> schemes = {WeightScheme::polya(), WeightScheme::simple(),
                                             WeightScheme::refined(Variant::Dedup)};
  for (const auto& s : seqs)
    for (const auto& w : schemes)
      if (!carleman_sums(s, w, 200).holds()) failures += " " + s.str() + "/" + to_string(w);
  const bool ok = chain.passed() && failures.empty();
  std::string flagged;
  for (long n : chain.nonpositive_epsilon) flagged += (flagged.empty() ? "" : ",") + std::to_string(n);
  return {10, "Carleman chains", ok,
          std::string("weight chain n<=10000 ") + (chain.passed() ? "passes" : "fails") +
              (flagged.empty() ? "" : " (eps_n<=0 flagged at n=" + flagged + ")") +
              "; N=200 sums " + (failures.empty() ? "hold for 3 sequences x 3 schemes" : "fail:" + failures)};
}

inline std::vector<CriterionResult> run_numbered() {
  return {symbolic_expansion(), optimum(),        correction_coefficients(), proof_certificates(), variant_adjudication(),
          classical_inequality(), keller_symbolics(), keller_numerics(),   polya(),              carleman_chains()};
}

inline std::string render(const std::vector<CriterionResult>& results) {
  std::string out;
  for (const auto& r : results) out += format_line(r) + "\n";
  return out;
}

/// All criteria; the last one re-runs the others and compares the rendered bytes.
inline std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> first = run_numbered();
  const std::string a = render(first);
  const std::string b = render(run_numbered());
  bool all = true;
  for (const auto& r : first) all = all && r.passed;
  first.push_back({11, "determinism", a == b && all,
                   std::string(a == b ? "two runs byte-identical" : "runs differ") + (all ? "" : "; earlier criteria failed")});
  return first;
}

}  // namespace eulerbound::acceptance
