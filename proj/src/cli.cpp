#include "frobpow/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "frobpow/closedform.hpp"
#include "frobpow/errors.hpp"
#include "frobpow/fppoly.hpp"
#include "frobpow/multiplier.hpp"
#include "frobpow/oracle.hpp"
#include "frobpow/parse.hpp"
#include "frobpow/report.hpp"

namespace frobpow::cli {

namespace {

using closedform::IdealFamily;
using nlohmann::json;

struct Options {
  std::string ideal;
  std::string b;
  std::string cls;
  std::string t;
  std::string poly;
  std::string u;
  std::string window;
  std::int64_t at_p = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t max_e = 1;
  std::int64_t cap = 0;
  unsigned threads = 1;
  bool json = false;
  bool skoda = false;
  bool closed = false;
};

// m / q with q a power of p.
std::pair<std::int64_t, std::int64_t> parse_parameter(const std::string& text, std::int64_t p) {
  const Rational t = parse_rational(text);
  if (t < 0) throw ValidationError("--t must be nonnegative, got " + text);
  if (!t.get_num().fits_slong_p() || !t.get_den().fits_slong_p()) throw ValidationError("--t is too large: " + text);
  const std::int64_t m = t.get_num().get_si();
  const std::int64_t q = t.get_den().get_si();
  if (!log_p(q, p))
    throw ValidationError("--t = " + text + " needs a denominator that is a power of p = " + std::to_string(p));
  return {m, q};
}

std::int64_t family_modulus(const ParsedIdeal& a) {
  if (a.max_ideal_power) return a.max_ideal_power->first;
  if (a.dvec) return lcm_of(*a.dvec);
  throw ValidationError("closed forms exist only for m^d(n) and diagonal ideals, got " + a.label);
}

ResidueClass resolve_class(const Options& o, const ParsedIdeal& a) {
  const std::int64_t d = family_modulus(a);
  if (!o.cls.empty()) {
    const auto rc = ResidueClass::parse(o.cls);
    if (rc.d != d) throw ValidationError("--class modulus " + std::to_string(rc.d) + " must equal d = " + std::to_string(d));
    return rc;
  }
  if (o.at_p > 0) {
    require_prime(o.at_p, "--at-p");
    return ResidueClass::of_prime(o.at_p, d);
  }
  throw ValidationError("pass --class rho%d or --at-p");
}

IdealFamily family_of(const Options& o, const ParsedIdeal& a, const ResidueClass& rc) {
  std::optional<closedform::CritWindow> window;
  if (!o.window.empty()) {
    const auto comma = o.window.find(',');
    if (comma == std::string::npos) throw ValidationError("--window expects lo,hi");
    window = closedform::CritWindow{parse_rational(o.window.substr(0, comma)), parse_rational(o.window.substr(comma + 1))};
  }
  IdealFamily fam;
  if (a.max_ideal_power && !(a.dvec && a.max_ideal_power->second == 1)) {
    fam = closedform::family_md(a.max_ideal_power->first, a.max_ideal_power->second, rc);
    if (window) {
      std::erase_if(fam.pieces, [&](const auto& piece) { return !window->contains(piece.breakpoint); });
      fam.window = window;
    }
  } else {
    fam = closedform::family_diag(*a.dvec, rc, window, o.threads);
  }
  fam.label = a.label;
  return fam;
}

int cmd_family(const Options& o, std::ostream& out) {
  const auto a = parse_ideal(o.ideal);
  const auto rc = resolve_class(o, a);
  const auto fam = family_of(o, a, rc);
  if (o.at_p > 0) {
    const auto at = closedform::eval_at_prime(fam, o.at_p);
    out << (o.json ? report::dump(report::family_json(fam, at)) : report::family_table(fam, at));
  } else {
    out << (o.json ? report::dump(report::family_json(fam)) : report::family_table(fam));
  }
  return kOk;
}

int cmd_crit(const Options& o, std::ostream& out) {
  const auto a = parse_ideal(o.ideal);
  const auto rc = resolve_class(o, a);
  if (o.u.empty()) throw ValidationError("crit needs --u");
  const auto u = parse_point(o.u);
  if (u.size() != a.ideal.nvars()) throw ValidationError("--u must have " + std::to_string(a.ideal.nvars()) + " coordinates");
  if (!u.all_positive()) throw ValidationError("--u must have positive coordinates");
  std::int64_t pmin = 0;
  closedform::SymbolicCrit crit = closedform::SymbolicCrit::one(rc.d);
  if (a.max_ideal_power && !a.dvec) {
    crit = closedform::crit_md(u.norm(), a.max_ideal_power->first, a.max_ideal_power->second, rc);
    pmin = a.max_ideal_power->first + 1;
  } else {
    closedform::DiagonalCrits table(*a.dvec, rc);
    crit = table.crit(u);
    pmin = table.pmin();
  }
  json doc{{"ideal", a.label}, {"u", std::vector<std::int64_t>(u.begin(), u.end())}, {"class", {{"d", rc.d}, {"rho", rc.rho}}},
           {"pmin", pmin}, {"crit", report::breakpoint_json(crit)}};
  std::string line = "crit(" + a.label + ", " + u.to_string() + ") = " + (crit.is_one() ? "1" : crit.to_string());
  if (o.at_p > 0) {
    const auto v = closedform::eval_at_prime(crit, rc, pmin, o.at_p);
    doc["p"] = o.at_p;
    doc["value"] = report::breakpoint_json(v);
    line += " = " + to_string(v) + " at p = " + std::to_string(o.at_p);
  }
  out << (o.json ? report::dump(doc) : line + "\n");
  return kOk;
}

int cmd_frobpow(const Options& o, std::ostream& out) {
  const auto a = parse_ideal(o.ideal);
  const std::int64_t p = o.p > 0 ? o.p : o.at_p;
  if (p <= 0) throw ValidationError("frobpow needs --p");
  require_prime(p);
  if (o.t.empty()) throw ValidationError("frobpow needs --t m/q");
  Rational t;
  MonomialIdeal result;
  if (o.closed) {
    t = parse_rational(o.t);
    Options oo = o;
    oo.at_p = p;
    const auto rc = resolve_class(oo, a);
    const auto fam = family_of(oo, a, rc);
    result = closedform::ideal_at(closedform::eval_at_prime(fam, p), t, a.ideal, o.skoda);
  } else {
    const auto [m, q] = parse_parameter(o.t, p);
    t = make_rational(m, q);
    result = frob_power_rational(a.ideal, m, q, p);
  }
  if (o.json) {
    out << report::dump(json{{"ideal", a.label}, {"p", p}, {"t", report::breakpoint_json(t)},
                             {"generators", report::generators_json(result)}});
  } else {
    out << "(" << a.label << ")^[" << to_string(t) << "] = " << report::ideal_text(result) << "\n";
  }
  return kOk;
}

int cmd_invariant(const Options& o, std::ostream& out, bool is_mu) {
  const auto a = parse_ideal(o.ideal);
  if (o.b.empty()) throw ValidationError("--b is required");
  const auto b = parse_ideal(o.b, a.ideal.nvars());
  if (o.p <= 0) throw ValidationError("--p is required");
  const std::int64_t q = o.q > 0 ? o.q : o.p;
  const oracle::InvariantQuery query(a.ideal, b.ideal, q, o.p);
  const oracle::OracleConfig cfg{o.cap};
  const std::int64_t v = is_mu ? oracle::mu(query, cfg) : oracle::nu(query, cfg);
  const char* name = is_mu ? "mu" : "nu";
  if (o.json)
    out << report::dump(json{{"a", a.label}, {"b", b.label}, {"p", o.p}, {"q", q}, {name, v}});
  else
    out << name << "(" << a.label << ", " << b.label << ", " << q << ") = " << v << "\n";
  return kOk;
}

int cmd_test_ideal(const Options& o, std::ostream& out) {
  if (o.p <= 0) throw ValidationError("--p is required");
  if (o.poly.empty()) throw ValidationError("--poly is required");
  if (o.t.empty()) throw ValidationError("--t m/q is required");
  const auto f = parse_polynomial(o.poly, o.p);
  const auto [m, q] = parse_parameter(o.t, o.p);
  PolyBudget budget;
  if (o.cap > 0) budget.max_terms = static_cast<std::size_t>(o.cap);
  const auto tau = test_ideal(f, m, q, budget);
  if (o.json) {
    json roots = json::array();
    for (const auto& bucket : tau.buckets) roots.push_back(bucket.root.to_string());
    json doc{{"poly", f.to_string()}, {"p", o.p}, {"t", report::breakpoint_json(make_rational(m, q))}, {"roots", roots}};
    doc["generators"] = tau.monomial ? report::generators_json(*tau.monomial) : json(nullptr);
    out << report::dump(doc);
  } else {
    out << "tau((" << f.to_string() << ")^" << to_string(make_rational(m, q)) << ") over F_" << o.p << "\n";
    if (tau.monomial) {
      out << "  = " << report::ideal_text(*tau.monomial) << "\n";
    } else {
      out << "  non-monomial output; generators:\n";
      for (const auto& bucket : tau.buckets) out << "    " << bucket.root.to_string() << "\n";
    }
  }
  return kOk;
}

multiplier::NewtonMembership membership_of(const ParsedIdeal& a) {
  if (a.dvec) return multiplier::NewtonMembership::diagonal(*a.dvec);
  if (a.max_ideal_power) return multiplier::NewtonMembership::max_ideal_power(a.max_ideal_power->first, a.max_ideal_power->second);
  throw ValidationError("multiplier ideals are supported for m^d(n) and diagonal ideals, got " + a.label);
}

int cmd_multiplier(const Options& o, std::ostream& out) {
  const auto a = parse_ideal(o.ideal);
  const auto nm = membership_of(a);
  if (!o.t.empty()) {
    const auto t = parse_rational(o.t);
    const auto j = multiplier::multiplier_ideal(nm, t);
    if (o.json)
      out << report::dump(json{{"ideal", a.label}, {"t", report::breakpoint_json(t)}, {"generators", report::generators_json(j)}});
    else
      out << "J((" << a.label << ")^" << to_string(t) << ") = " << report::ideal_text(j) << "\n";
    return kOk;
  }
  auto fam = multiplier::jumping_numbers(nm);
  fam.label = a.label;
  out << (o.json ? report::dump(report::family_json(fam)) : report::family_table(fam));
  return kOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const auto a = parse_ideal(o.ideal);
  if (!a.dvec) throw ValidationError("compare needs a diagonal ideal, got " + a.label);
  const std::int64_t p = o.p > 0 ? o.p : o.at_p;
  if (p <= 0) throw ValidationError("--p is required");
  const auto rep = multiplier::compare_thm64(*a.dvec, p);
  if (o.json) {
    json doc{{"ideal", a.label}, {"p", p}, {"result", rep.equal() ? "EQUAL" : "DIFFERENT"}, {"mismatches", rep.mismatches},
             {"below_generic_bound", rep.below_generic_bound}};
    json pieces = json::array();
    for (const auto& piece : rep.multiplier.pieces)
      pieces.push_back(json{{"breakpoint", report::breakpoint_json(piece.breakpoint)}, {"generators", report::generators_json(piece.ideal)}});
    doc["pieces"] = pieces;
    out << report::dump(doc);
  } else {
    out << "Frobenius powers vs multiplier ideals of " << a.label << " at p = " << p << "\n";
    auto fam = rep.multiplier;
    fam.label = a.label;
    out << report::family_table(fam);
    if (rep.below_generic_bound) out << "note: p is at or below n d - n\n";
    for (const auto& m : rep.mismatches) out << "mismatch: " << m << "\n";
    out << (rep.equal() ? "EQUAL" : "DIFFERENT") << "\n";
  }
  return rep.equal() ? kOk : kMismatch;
}

struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

int cmd_verify(const Options& o, std::ostream& out) {
  const auto a = parse_ideal(o.ideal);
  if (o.p <= 0) throw ValidationError("--p is required");
  require_prime(o.p);
  if (o.max_e < 1) throw ValidationError("--max-e must be positive");
  const std::int64_t d = family_modulus(a);
  if (d % o.p == 0) throw ValidationError("p = " + std::to_string(o.p) + " divides d = " + std::to_string(d));
  const auto rc = ResidueClass::of_prime(o.p, d);
  const std::size_t n = a.ideal.nvars();
  const oracle::OracleConfig cfg{o.cap};
  const bool md = a.max_ideal_power && !a.dvec;

  std::vector<ExponentVector> points;
  std::optional<closedform::DiagonalCrits> table;
  if (md) {
    for (auto k = static_cast<std::int64_t>(n); k <= d; ++k)
      for (auto& u : closedform::compositions(k, n)) points.push_back(u);
  } else {
    const auto nn = static_cast<std::int64_t>(n);
    if (o.p <= nn * d - nn)
      throw ValidationError("p = " + std::to_string(o.p) + " must exceed n d - n = " + std::to_string(nn * d - nn));
    table.emplace(*a.dvec, rc);
    const GradedWeights w(*a.dvec);
    for (auto k = nn; k <= a.dvec->norm(); ++k)
      for (auto& u : closedform::compositions(k, n))
        if (u.divides(*a.dvec) && w.deg(u) <= d) points.push_back(u);
  }

  out << "verify " << a.label << " at p = " << o.p << " (class " << rc.to_string() << ")\n";
  bool all_ok = true;
  for (std::int64_t e = 1; e <= o.max_e; ++e) {
    const std::int64_t q = checked_pow(o.p, e);
    Tally closed, fast, bounds;
    const bool balanced = !md && GradedWeights(*a.dvec).balanced();
    for (const auto& u : points) {
      const auto b = diag(u);
      const std::int64_t mu = oracle::mu(oracle::InvariantQuery(a.ideal, b, q, o.p), cfg);
      const std::int64_t expect = md ? closedform::mu_md(u.norm(), d, n, o.p, e) : closedform::mu_diag(u, *a.dvec, o.p, e);
      closed.check(mu == expect, "mu" + u.to_string() + " = " + std::to_string(mu) + ", closed form " + std::to_string(expect));
      if (balanced) {
        const auto f = oracle::mu_diag_fast(u, q, d, o.p);
        fast.check(f == mu, "mu_diag_fast" + u.to_string() + " = " + std::to_string(f) + ", oracle " + std::to_string(mu));
      }
      const auto crit = md ? closedform::crit_md(u.norm(), d, n, rc) : table->crit(u);
      const Rational value = crit.is_one() ? Rational(1) : crit.eval(o.p);
      bounds.check(make_rational(mu, q) <= value && value <= make_rational(mu + 1, q),
                   "crit" + u.to_string() + " = " + to_string(value) + " outside [mu/q, (mu+1)/q] with mu = " + std::to_string(mu));
    }
    auto line = [&](const std::string& what, const Tally& t) {
      if (t.checks == 0) return;
      out << "  q = " << q << ": " << what << ": " << (t.failures.empty() ? "PASS" : "FAIL") << " (" << t.checks << " points)\n";
      for (const auto& f : t.failures) out << "    " << f << "\n";
      all_ok = all_ok && t.failures.empty();
    };
    line("oracle mu = closed-form mu", closed);
    line("mu_diag_fast = oracle mu", fast);
    line("mu/q <= crit <= (mu+1)/q", bounds);
  }
  out << (all_ok ? "PASS" : "FAIL") << "\n";
  return all_ok ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius powers, critical exponents, test ideals and multiplier ideals of monomial ideals", "frobpow"};
  app.require_subcommand(1);
  Options o;

  auto ideal_opt = [&](CLI::App* s) { s->add_option("--ideal", o.ideal, "x1^6, x2^4 | m^7(3) | diag(6,4)")->required(); };
  auto json_opt = [&](CLI::App* s) { s->add_flag("--json", o.json, "Emit JSON"); };

  auto* crit = app.add_subcommand("crit", "Closed-form critical exponent crit(a, u)");
  ideal_opt(crit);
  crit->add_option("--u", o.u, "Point u > 0, e.g. 1,1,1")->required();
  crit->add_option("--class", o.cls, "Residue class rho%d of p");
  crit->add_option("--at-p", o.at_p, "Evaluate at this prime");
  json_opt(crit);

  auto* family = app.add_subcommand("family", "Closed-form Frobenius-power family on [0, 1)");
  ideal_opt(family);
  family->add_option("--class", o.cls, "Residue class rho%d of p");
  family->add_option("--at-p", o.at_p, "Evaluate breakpoints at this prime");
  family->add_option("--window", o.window, "Keep breakpoints in the open interval lo,hi");
  family->add_option("--threads", o.threads, "Worker threads for the crit enumeration");
  json_opt(family);

  auto* frobpow = app.add_subcommand("frobpow", "Frobenius power a^[t] for t = m/q");
  ideal_opt(frobpow);
  frobpow->add_option("--t", o.t, "Parameter m/q; without --closed, q must be a power of p")->required();
  frobpow->add_option("--p", o.p, "Characteristic")->required();
  frobpow->add_flag("--closed", o.closed, "Read the value off the closed-form family");
  frobpow->add_flag("--skoda", o.skoda, "Allow t >= 1 via a^[t] = a * a^[t-1] (with --closed)");
  frobpow->add_option("--threads", o.threads, "Worker threads for the crit enumeration");
  json_opt(frobpow);

  for (auto [name, help] : {std::pair{"mu", "mu(a, b, q) by definition"}, std::pair{"nu", "nu(a, b, q) by definition"}}) {
    auto* s = app.add_subcommand(name, help);
    ideal_opt(s);
    s->add_option("--b", o.b, "Ideal b with a in its radical")->required();
    s->add_option("--q", o.q, "Power of p (default p)");
    s->add_option("--p", o.p, "Characteristic")->required();
    s->add_option("--cap", o.cap, "Largest m the search may try");
    json_opt(s);
  }

  auto* tau = app.add_subcommand("test-ideal", "Test ideal tau(f^(m/q)) = <f^m>^[1/q]");
  tau->add_option("--poly", o.poly, "Polynomial, e.g. x1^3 + 2*x2^4 + x3^5")->required();
  tau->add_option("--p", o.p, "Characteristic")->required();
  tau->add_option("--t", o.t, "Parameter m/q; without --closed, q must be a power of p")->required();
  tau->add_option("--cap", o.cap, "Term budget for f^m");
  json_opt(tau);

  auto* mult = app.add_subcommand("multiplier", "Multiplier ideals and jumping numbers on [0, 1)");
  ideal_opt(mult);
  mult->add_option("--t", o.t, "Single parameter in [0, 1)");
  json_opt(mult);

  auto* compare = app.add_subcommand("compare", "Frobenius powers vs multiplier ideals at p = 1 mod d");
  ideal_opt(compare);
  compare->add_option("--p", o.p, "Prime with p = 1 mod d")->required();
  json_opt(compare);

  auto* verify = app.add_subcommand("verify", "Check closed forms against the brute-force oracle");
  ideal_opt(verify);
  verify->add_option("--p", o.p, "Characteristic")->required();
  verify->add_option("--max-e", o.max_e, "Check q = p, ..., p^max-e");
  verify->add_option("--cap", o.cap, "Largest m the oracle search may try");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (crit->parsed()) return cmd_crit(o, out);
    if (family->parsed()) return cmd_family(o, out);
    if (frobpow->parsed()) return cmd_frobpow(o, out);
    if (app.get_subcommand("mu")->parsed()) return cmd_invariant(o, out, true);
    if (app.get_subcommand("nu")->parsed()) return cmd_invariant(o, out, false);
    if (tau->parsed()) return cmd_test_ideal(o, out);
    if (mult->parsed()) return cmd_multiplier(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kValidation;
}

}  // namespace frobpow::cli
