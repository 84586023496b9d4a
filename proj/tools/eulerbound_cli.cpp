// Command-line front end.
//
//   eulerbound expand     [--order N] [--bound rational|u|v] [--variant V]
//   eulerbound optimize
//   eulerbound prove      [--bound u|v] [--side lower|upper] [--variant V]
//   eulerbound check      [--n 1,2,...] [--variant V] [--width W] [--classic]
//   eulerbound keller     [--n 10,100,...] [--width W] [--variant V] [--exact]
//   eulerbound carleman   [--seq geometric:1/2|power:2|custom:a,b,..] [--N 200]
//                         [--scheme polya,simple,refined,classical] [--chain N]
//   eulerbound verify-all
//
// Exit status: 0 success / Proven / Holds, 1 Refuted / Fails, 2 Inconclusive /
// Undecided, 64 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eulerbound/acceptance.hpp"
#include "eulerbound/eulerbound.hpp"

namespace {

using namespace eulerbound;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

enum class Format { Text, Csv, Json };

struct RunConfig {
  Format format = Format::Text;
  unsigned digits = 12;
  std::size_t order = kDefaultOrder;
  std::string variant = "dedup";
  std::string bound;
  std::string side;
  std::string width = "1e-30";
  std::vector<long> ns;
  bool classic = false;
  bool exact = false;
  std::string seq = "geometric:1/2";
  long N = 200;
  std::vector<std::string> schemes = {"polya", "simple", "refined", "classical"};
  long chain = 0;
};

BigRat parse_width(const std::string& s) {
  const auto e = s.find_first_of("eE");
  if (e == std::string::npos) {
    BigRat w = BigRat::parse(s);
    if (w.sign() <= 0) throw ParseError("width must be positive");
    return w;
  }
  const BigRat mant = BigRat::parse(s.substr(0, e));
  long exp10 = 0;
  try {
    exp10 = std::stol(s.substr(e + 1));
  } catch (const std::exception&) {
    throw ParseError("malformed width: " + s);
  }
  const BigRat w = mant * pow10(exp10);
  if (w.sign() <= 0) throw ParseError("width must be positive");
  return w;
}

TestSequence parse_sequence(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("sequence must look like kind:param, got " + s);
  const std::string kind = s.substr(0, colon);
  const std::string arg = s.substr(colon + 1);
  if (kind == "geometric") return TestSequence::geometric(BigRat::parse(arg));
  if (kind == "power") {
    const BigRat p = BigRat::parse(arg);
    if (!p.is_integer()) throw ParseError("power-law exponent must be an integer");
    return TestSequence::power_law(p.num().get_si());
  }
  if (kind == "custom") {
    std::vector<BigRat> v;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(BigRat::parse(item));
    if (v.empty()) throw ParseError("custom sequence is empty");
    return TestSequence::custom(std::move(v));
  }
  throw ParseError("unknown sequence kind " + kind);
}

WeightScheme parse_scheme(const std::string& s, Variant v) {
  if (s == "polya") return WeightScheme::polya();
  if (s == "simple") return WeightScheme::simple();
  if (s == "refined") return WeightScheme::refined(v);
  if (s == "classical") return WeightScheme::classical();
  throw ParseError("unknown scheme " + s + " (expected polya|simple|refined|classical)");
}

std::string csv_value(const BigRat& q, const RunConfig& cfg) {
  return cfg.exact ? q.str() : decimal(q, cfg.digits);
}

std::string csv_interval(const RatInterval& x, const RunConfig& cfg) {
  return cfg.exact ? x.lo().str() + "," + x.hi().str() : render_interval_csv(x, cfg.digits);
}

json interval_json(const RatInterval& x, unsigned digits) {
  return {{"lo", x.lo().str()},
          {"hi", x.hi().str()},
          {"lo_decimal", decimal(x.lo(), digits, Rounding::Down)},
          {"hi_decimal", decimal(x.hi(), digits, Rounding::Up)}};
}

int run_expand(const RunConfig& cfg, std::ostream& out) {
  if (cfg.order < 3) throw ParseError("--order must be >= 3");
  if (cfg.bound.empty()) {
    const ParamSeries w = expand_relative_error(cfg.order);
    if (cfg.format == Format::Json) {
      json j = json::array();
      for (std::size_t k = 0; k <= w.order(); ++k) {
        json terms = json::array();
        for (const auto& [i, jj, c] : w[k].triples()) terms.push_back({i, jj, c});
        j.push_back({{"power", k}, {"terms", terms}});
      }
      out << json{{"series", "relative_error"}, {"coefficients", j}}.dump(2) << "\n";
    } else if (cfg.format == Format::Csv) {
      out << "power,coefficient\n";
      for (std::size_t k = 0; k <= w.order(); ++k) out << k << ",\"" << w[k].str() << "\"\n";
    } else {
      out << "w = x ln(1+1/x) - 1 - ln((x+a)/(x+b)) in t = 1/x\n";
      for (std::size_t k = 0; k <= w.order(); ++k) out << "  t^" << k << ": " << w[k].str() << "\n";
    }
    return kExitOk;
  }
  const Variant variant = parse_variant(cfg.variant);
  BoundSpec bound = bounds::optimal_rational();
  if (cfg.bound == "u") bound = bounds::lower();
  else if (cfg.bound == "v") bound = bounds::upper(variant);
  else if (cfg.bound != "rational") throw ParseError("--bound must be rational|u|v");
  const QSeries g = expand_bound_gap(bound, cfg.order);
  if (cfg.format == Format::Json) {
    out << json{{"series", "bound_gap"}, {"bound", bound.str()}, {"coefficients", serialize(g)}}.dump(2) << "\n";
  } else if (cfg.format == Format::Csv) {
    out << "power,coefficient\n";
    for (std::size_t k = 0; k <= g.order(); ++k) out << k << "," << g[k].str() << "\n";
  } else {
    out << "(1/e)(1+1/x)^x - [" << bound.str() << "] in t = 1/x\n";
    for (std::size_t k = 0; k <= g.order(); ++k) out << "  t^" << k << ": " << render_value(g[k], cfg.digits) << "\n";
  }
  return kExitOk;
}

int run_optimize(const RunConfig& cfg, std::ostream& out) {
  const OptimalParams p = solve_optimal_params();
  if (cfg.format == Format::Json) {
    out << json{{"a", p.a.str()}, {"b", p.b.str()}, {"residual_t3", p.residual.str()}}.dump(2) << "\n";
  } else if (cfg.format == Format::Csv) {
    out << "a,b,residual_t3\n" << p.a << "," << p.b << "," << p.residual << "\n";
  } else {
    out << "a=" << p.a << " b=" << p.b << "\n";
    out << "residual t^3 coefficient: " << render_value(p.residual, cfg.digits) << "\n";
  }
  return kExitOk;
}

int exit_for(Conclusion c) {
  switch (c) {
    case Conclusion::Proven: return kExitOk;
    case Conclusion::Refuted: return kExitRefuted;
    default: return kExitInconclusive;
  }
}

int run_prove(const RunConfig& cfg, std::ostream& out) {
  const Variant variant = parse_variant(cfg.variant);
  const std::string which = cfg.bound.empty() ? "u" : cfg.bound;
  if (which != "u" && which != "v") throw ParseError("--bound must be u|v");
  Side side = which == "u" ? Side::Lower : Side::Upper;
  if (cfg.side == "lower") side = Side::Lower;
  else if (cfg.side == "upper") side = Side::Upper;
  else if (!cfg.side.empty()) throw ParseError("--side must be lower|upper");
  const BoundSpec bound = which == "u" ? bounds::lower() : bounds::upper(variant);
  const ProofReport report = prove_bound(bound, side);
  const auto matches = match_reference_polynomials(report);
  if (cfg.format == Format::Json) {
    json j{{"bound", bound.str()},
           {"side", to_string(side)},
           {"conclusion", to_string(report.conclusion)},
           {"bound_positive", report.bound_positive},
           {"limit_at_infinity_ok", report.limit_at_infinity_ok}};
    if (report.certificate) {
      json coeffs = json::array();
      for (const auto& c : report.certificate->shifted_poly.coeffs()) coeffs.push_back(c.str());
      j["certificate"] = {{"x0", report.certificate->x0.str()},
                          {"multiplicity", report.certificate->boundary_factor_multiplicity},
                          {"sign", report.certificate->claimed_sign},
                          {"shifted_poly", coeffs},
                          {"pieces", report.certificate->pieces.size()}};
    }
    if (report.witness)
      j["witness"] = {{"x", report.witness->x.str()},
                      {"bound_value", report.witness->bound_value.str()},
                      {"enclosure", interval_json(report.witness->enclosure, cfg.digits)}};
    json m = json::array();
    for (const auto& pm : matches) m.push_back({{"name", pm.name}, {"matches", pm.matches}});
    j["printed_polynomials"] = m;
    out << j.dump(2) << "\n";
  } else if (cfg.format == Format::Csv) {
    out << "bound,side,conclusion,witness_x\n";
    out << '"' << bound.str() << "\"," << to_string(side) << "," << to_string(report.conclusion) << ","
        << (report.witness ? report.witness->x.str() : "") << "\n";
  } else {
    out << certificate_text(report);
    if (report.witness)
      out << "witness enclosure at x=" << report.witness->x << ": " << render_interval(report.witness->enclosure, cfg.digits)
          << " vs bound " << render_value(report.witness->bound_value, cfg.digits) << "\n";
    for (const auto& pm : matches) out << "printed " << pm.name << ": " << (pm.matches ? "matches" : "differs") << "\n";
  }
  return exit_for(report.conclusion);
}

int worst_exit(Outcome o, int current) {
  if (o == Outcome::Fails) return kExitRefuted;
  if (o == Outcome::Undecided && current == kExitOk) return kExitInconclusive;
  return current;
}

int run_check(const RunConfig& cfg, std::ostream& out) {
  const Variant variant = parse_variant(cfg.variant);
  const BigRat width = parse_width(cfg.width);
  const std::vector<long> ns = cfg.ns.empty() ? std::vector<long>{1} : cfg.ns;
  int code = kExitOk;
  json rows = json::array();
  if (cfg.format == Format::Csv) out << "n,lower,lo,hi,upper,outcome\n";
  for (long n : ns) {
    if (n < 1) throw ParseError("--n values must be >= 1");
    const CheckResult r = cfg.classic ? check_classic_at(n, width) : check_theorem1_at(BigRat(n), variant, width);
    code = worst_exit(r.outcome, code);
    std::string outcome = to_string(r.outcome);
    if (r.failed_side) outcome += "(" + to_string(*r.failed_side) + ")";
    if (cfg.format == Format::Json) {
      rows.push_back({{"n", n},
                      {"lower", r.lower.str()},
                      {"upper", r.upper.str()},
                      {"enclosure", interval_json(r.enclosure, cfg.digits)},
                      {"outcome", outcome}});
    } else if (cfg.format == Format::Csv) {
      out << n << "," << csv_value(r.lower, cfg) << "," << csv_interval(r.enclosure, cfg) << ","
          << csv_value(r.upper, cfg) << "," << outcome << "\n";
    } else {
      out << "n=" << n << "  " << decimal(r.lower, cfg.digits) << " < " << render_interval(r.enclosure, cfg.digits)
          << " < " << decimal(r.upper, cfg.digits) << "  " << outcome << "\n";
    }
  }
  if (cfg.format == Format::Json)
    out << json{{"check", cfg.classic ? "classic" : "theorem1"}, {"variant", cfg.variant}, {"rows", rows}}.dump(2)
        << "\n";
  return code;
}

int run_keller(const RunConfig& cfg, std::ostream& out) {
  const Variant variant = parse_variant(cfg.variant);
  const BigRat width = parse_width(cfg.width);
  const std::vector<long> ns = cfg.ns.empty() ? std::vector<long>{10, 100, 1000} : cfg.ns;
  for (long n : ns)
    if (n < 2) throw ParseError("--n values must be >= 2");
  const SandwichLimits lim = sandwich_limits(variant);
  const auto displays = match_sandwich_displays(variant);
  const auto rows = convergence_table(ns, width, variant);
  const BigRat target(1, 24);
  bool contained = true;
  for (const auto& r : rows) contained = contained && r.contained();
  if (cfg.format == Format::Json) {
    json jr = json::array();
    for (const auto& r : rows)
      jr.push_back({{"n", r.n},
                    {"scaled", interval_json(r.scaled, cfg.digits)},
                    {"sandwich_lo", r.sandwich_lo.str()},
                    {"sandwich_hi", r.sandwich_hi.str()},
                    {"contained", r.contained()}});
    json jd = json::array();
    for (const auto& d : displays) {
      json computed = json::array();
      for (const auto& c : d.computed) computed.push_back(c.str());
      json printed = json::array();
      for (const auto& c : d.printed) printed.push_back(c.str());
      jd.push_back({{"name", d.name}, {"degree", d.numerator_degree}, {"computed", computed}, {"printed", printed}});
    }
    out << json{{"limit", lim.limit.str()}, {"rate", lim.rate.str()}, {"displays", jd}, {"rows", jr}}.dump(2) << "\n";
  } else if (cfg.format == Format::Csv) {
    out << "n,lo,hi,sandwich_lo,sandwich_hi,target\n";
    for (const auto& r : rows)
      out << r.n << "," << csv_interval(r.scaled, cfg) << "," << csv_value(r.sandwich_lo, cfg) << ","
          << csv_value(r.sandwich_hi, cfg) << "," << csv_value(target, cfg) << "\n";
  } else {
    out << "x_n -> " << lim.limit << "  (Keller: e)\n";
    out << "n^2 (x_n - 1) -> " << render_value(lim.rate, cfg.digits) << "  (unnormalized: e/24)\n";
    for (const auto& d : displays) {
      out << d.name << ": degree " << d.numerator_degree << ", leading";
      for (std::size_t k = 0; k < d.printed.size(); ++k)
        out << " " << (k < d.computed.size() ? d.computed[k].str() : "?") << (d.equal[k] ? " (as printed)" : " (printed " + d.printed[k].str() + ")");
      out << "\n";
    }
    out << "n  n^2(x_n-1)  sandwich\n";
    for (const auto& r : rows)
      out << r.n << "  " << render_interval(r.scaled, cfg.digits) << "  [" << decimal(r.sandwich_lo, cfg.digits, Rounding::Down)
          << ", " << decimal(r.sandwich_hi, cfg.digits, Rounding::Up) << "]" << (r.contained() ? "" : "  NOT CONTAINED")
          << "\n";
  }
  return contained ? kExitOk : kExitRefuted;
}

int run_carleman(const RunConfig& cfg, std::ostream& out) {
  const Variant variant = parse_variant(cfg.variant);
  if (cfg.chain > 0) {
    const ChainReport chain = termwise_weight_chain(cfg.chain, variant);
    if (cfg.format == Format::Json) {
      json links = json::array();
      for (const auto& l : chain.links)
        links.push_back({{"name", l.name},
                         {"passed", l.passed},
                         {"first_failure", l.first_failure ? json(*l.first_failure) : json(nullptr)},
                         {"undecided", l.undecided}});
      out << json{{"N", chain.N}, {"variant", to_string(variant)}, {"links", links},
                  {"nonpositive_epsilon", chain.nonpositive_epsilon}}.dump(2)
          << "\n";
    } else {
      if (cfg.format == Format::Csv) out << "link,passed,first_failure,undecided\n";
      for (const auto& l : chain.links) {
        const std::string ff = l.first_failure ? std::to_string(*l.first_failure) : "";
        if (cfg.format == Format::Csv)
          out << l.name << "," << (l.passed ? "true" : "false") << "," << ff << "," << l.undecided << "\n";
        else
          out << l.name << ": " << (l.passed ? "passes" : "fails") << (ff.empty() ? "" : " first at n=" + ff) << "\n";
      }
      if (cfg.format == Format::Text && !chain.nonpositive_epsilon.empty()) {
        out << "eps_n <= 0 at n =";
        for (long n : chain.nonpositive_epsilon) out << " " << n;
        out << "\n";
      }
    }
    return chain.passed() ? kExitOk : kExitRefuted;
  }

  if (cfg.N < 1) throw ParseError("--N must be >= 1");
  const TestSequence seq = parse_sequence(cfg.seq);
  if (seq.kind == SequenceKind::Custom && static_cast<std::size_t>(cfg.N) > seq.values.size())
    throw ParseError("--N exceeds the custom sequence length");
  std::vector<WeightScheme> schemes;
  for (const auto& s : cfg.schemes) schemes.push_back(parse_scheme(s, variant));

  const BigRat width = default_width();
  const auto means = geometric_means(seq, cfg.N, width / BigRat(cfg.N));
  std::vector<CarlemanSums> sums;
  for (const auto& s : schemes) sums.push_back(carleman_sums(seq, s, cfg.N, width));
  bool all_hold = true;
  for (const auto& s : sums) all_hold = all_hold && s.holds();

  if (cfg.format == Format::Json) {
    json totals = json::array();
    for (std::size_t i = 0; i < schemes.size(); ++i)
      totals.push_back({{"scheme", to_string(schemes[i])},
                        {"lhs", interval_json(sums[i].lhs, cfg.digits)},
                        {"rhs", interval_json(sums[i].rhs, cfg.digits)},
                        {"holds", sums[i].holds()}});
    out << json{{"sequence", seq.str()}, {"N", cfg.N}, {"truncated", true}, {"totals", totals}}.dump(2) << "\n";
  } else if (cfg.format == Format::Csv) {
    out << "n,a_n,lhs_term_lo,lhs_term_hi";
    for (const auto& s : schemes) out << "," << to_string(s) << "_lo," << to_string(s) << "_hi";
    out << "\n";
    for (long n = 1; n <= cfg.N; ++n) {
      out << n << "," << csv_value(seq(n), cfg) << "," << csv_interval(means[static_cast<std::size_t>(n - 1)], cfg);
      for (const auto& s : schemes) out << "," << csv_interval(weights(s, n).value, cfg);
      out << "\n";
    }
    for (std::size_t i = 0; i < schemes.size(); ++i)
      out << "# total " << to_string(schemes[i]) << " N=" << cfg.N << " lhs=" << csv_interval(sums[i].lhs, cfg)
          << " rhs=" << csv_interval(sums[i].rhs, cfg) << " holds=" << (sums[i].holds() ? "true" : "false") << "\n";
  } else {
    out << "sequence " << seq.str() << ", truncated at N=" << cfg.N << "\n";
    for (std::size_t i = 0; i < schemes.size(); ++i)
      out << to_string(schemes[i]) << ": lhs " << render_interval(sums[i].lhs, cfg.digits) << " <= rhs "
          << render_interval(sums[i].rhs, cfg.digits) << "  " << (sums[i].holds() ? "holds" : "FAILS") << "\n";
  }
  return all_hold ? kExitOk : kExitRefuted;
}

int run_verify_all(const RunConfig& cfg, std::ostream& out) {
  const auto results = acceptance::run_all();
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (cfg.format == Format::Json) {
    json j = json::array();
    for (const auto& r : results) j.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    out << json{{"passed", all}, {"criteria", j}}.dump(2) << "\n";
  } else if (cfg.format == Format::Csv) {
    out << "id,title,passed\n";
    for (const auto& r : results) out << r.id << "," << r.title << "," << (r.passed ? "true" : "false") << "\n";
  } else {
    out << acceptance::render(results);
    out << (all ? "ALL PASS" : "FAILURES") << "\n";
  }
  return all ? kExitOk : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certification of bounds on (1+1/n)^n, Keller's limit and Carleman weights"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text|csv|json")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--digits", cfg.digits, "decimal digits in rendered output");
  };
  auto add_variant = [&](CLI::App* sub) {
    sub->add_option("--variant", cfg.variant, "as-written|dedup")->check(CLI::IsMember({"as-written", "dedup"}));
  };

  CLI::App* expand = app.add_subcommand("expand", "asymptotic expansions in t = 1/x");
  add_common(expand);
  add_variant(expand);
  expand->add_option("--order", cfg.order, "truncation order");
  expand->add_option("--bound", cfg.bound, "rational|u|v: expand the gap to this bound instead of w_n");

  CLI::App* optimize = app.add_subcommand("optimize", "optimal (a, b) for (x+a)/(x+b)");
  add_common(optimize);

  CLI::App* prove = app.add_subcommand("prove", "certify a bound on [1, inf)");
  add_common(prove);
  add_variant(prove);
  prove->add_option("--bound", cfg.bound, "u|v");
  prove->add_option("--side", cfg.side, "lower|upper (default from the bound)");

  CLI::App* check = app.add_subcommand("check", "rigorous spot checks at integer n");
  add_common(check);
  add_variant(check);
  check->add_option("--n", cfg.ns, "sample points")->delimiter(',');
  check->add_option("--width", cfg.width, "enclosure width, p/q or 1e-30");
  check->add_flag("--classic", cfg.classic, "check 2n/(2n+1) < E(n) < (2n+1)/(2n+2) instead");
  check->add_flag("--exact", cfg.exact, "CSV values as p/q");

  CLI::App* keller = app.add_subcommand("keller", "Keller limit sandwich and convergence table");
  add_common(keller);
  add_variant(keller);
  keller->add_option("--n", cfg.ns, "table rows")->delimiter(',');
  keller->add_option("--width", cfg.width, "enclosure width for n^2 (x_n - 1)");
  keller->add_flag("--exact", cfg.exact, "CSV values as p/q");

  CLI::App* carleman = app.add_subcommand("carleman", "weighted Carleman sums and weight chains");
  add_common(carleman);
  add_variant(carleman);
  carleman->add_option("--seq", cfg.seq, "geometric:r | power:p | custom:a1,a2,...");
  carleman->add_option("--N", cfg.N, "truncation length");
  carleman->add_option("--scheme", cfg.schemes, "polya,simple,refined,classical")->delimiter(',');
  carleman->add_option("--chain", cfg.chain, "run the termwise weight chain up to this n instead");
  carleman->add_flag("--exact", cfg.exact, "CSV values as p/q");

  CLI::App* verify = app.add_subcommand("verify-all", "run every acceptance criterion");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  cfg.format = format == "csv" ? Format::Csv : (format == "json" ? Format::Json : Format::Text);

  try {
    if (*expand) return run_expand(cfg, std::cout);
    if (*optimize) return run_optimize(cfg, std::cout);
    if (*prove) return run_prove(cfg, std::cout);
    if (*check) return run_check(cfg, std::cout);
    if (*keller) return run_keller(cfg, std::cout);
    if (*carleman) return run_carleman(cfg, std::cout);
    if (*verify) return run_verify_all(cfg, std::cout);
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
