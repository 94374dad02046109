#include "frobpow/closedform.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>

#include "frobpow/errors.hpp"

namespace frobpow::closedform {

namespace {

std::string fraction(std::int64_t num, std::int64_t den) {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

// Position of a rational c relative to the crit: -1 if c < crit, 0 if equal,
// +1 if c > crit, at every admissible prime.
int compare_rational(const Rational& c, const SymbolicCrit& crit) {
  const Rational top = make_rational(crit.k(), crit.d());
  const Rational below = make_rational(crit.k() - 1, crit.d());
  if (crit.s().is_infinite()) {
    if (c == top) return 0;
    if (c > top) return 1;
    if (c <= below) return -1;
  } else {
    if (c >= top) return 1;
    if (c <= below) return -1;
  }
  throw ValidationError("window endpoint " + to_string(c) + " cannot be compared with " + crit.to_string() +
                        " independently of p; use multiples of 1/" + std::to_string(crit.d()));
}

// All v >= 1 (coordinatewise) with weighted degree exactly `target`.
void points_of_degree(const ExponentVector& weights, std::int64_t target, std::size_t i, ExponentVector& cur,
                      std::vector<ExponentVector>& out) {
  const std::size_t n = weights.size();
  if (i == n) {
    if (target == 0) out.push_back(cur);
    return;
  }
  std::int64_t rest_min = 0;
  for (std::size_t j = i + 1; j < n; ++j) rest_min += weights[j];
  for (std::int64_t c = 1; weights[i] * c + rest_min <= target; ++c) {
    cur[i] = c;
    points_of_degree(weights, target - weights[i] * c, i + 1, cur, out);
  }
  cur[i] = 0;
}

void check_family(const IdealFamily& fam) {
  for (std::size_t i = 0; i < fam.pieces.size(); ++i) {
    const auto& cur = fam.pieces[i];
    if (i == 0) {
      if (!fam.window && cur.ideal.is_unit())
        throw InternalError(fam.label + ": first piece is the unit ideal at " + cur.breakpoint.to_string());
      continue;
    }
    const auto& prev = fam.pieces[i - 1];
    if (!(prev.breakpoint < cur.breakpoint))
      throw InternalError(fam.label + ": breakpoints out of order at " + cur.breakpoint.to_string());
    if (prev.ideal == cur.ideal || !prev.ideal.contains(cur.ideal))
      throw InternalError(fam.label + ": ideals fail to strictly decrease at " + cur.breakpoint.to_string());
  }
}

}  // namespace

SymbolicCrit::SymbolicCrit(std::int64_t k, std::int64_t d, ExtNat s, std::int64_t r)
    : k_(k), d_(d), s_(s), r_(r) {
  if (d_ < 1) throw ValidationError("SymbolicCrit: d must be positive");
  if (k_ < 1) throw ValidationError("SymbolicCrit: k must be positive");
  if (s_.is_infinite() && r_ != 0) throw InternalError("SymbolicCrit: s = inf requires r = 0");
  if (s_.is_finite() && r_ < 1) throw InternalError("SymbolicCrit: finite s requires r >= 1");
}

Rational SymbolicCrit::eval(std::int64_t p) const {
  Rational v = make_rational(k_, d_);
  if (s_.is_finite()) {
    BigInt ps;
    mpz_ui_pow_ui(ps.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(s_.value()));
    v -= make_rational(BigInt(static_cast<long>(r_)), BigInt(static_cast<long>(d_)) * ps);
  }
  return v;
}

SymbolicCrit SymbolicCrit::reduced() const {
  const std::int64_t g = std::gcd(std::gcd(k_, d_), r_);
  return SymbolicCrit(k_ / g, d_ / g, s_, r_ / g);
}

std::string SymbolicCrit::to_string() const {
  const auto c = reduced();
  std::string out = fraction(c.k_, c.d_);
  if (c.s_.is_finite()) {
    std::string den = c.d_ == 1 ? "p" : std::to_string(c.d_) + "p";
    if (c.s_.value() > 1) den += "^" + std::to_string(c.s_.value());
    out += " - " + std::to_string(c.r_) + "/" + (c.d_ == 1 ? den : "(" + den + ")");
  }
  return out;
}

std::strong_ordering operator<=>(const SymbolicCrit& a, const SymbolicCrit& b) {
  if (a.d_ != b.d_) throw InternalError("SymbolicCrit: comparing crits with different d");
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  if (auto c = a.s_ <=> b.s_; c != 0) return c;
  return b.r_ <=> a.r_;
}

bool CritWindow::contains(const SymbolicCrit& c) const {
  return compare_rational(lo, c) < 0 && compare_rational(hi, c) > 0;
}

std::vector<ExponentVector> compositions(std::int64_t k, std::size_t n) {
  std::vector<ExponentVector> out;
  if (n == 0 || k < static_cast<std::int64_t>(n)) return out;
  for (auto v : weak_compositions(k - static_cast<std::int64_t>(n), n)) {
    for (auto& x : v) x += 1;
    out.push_back(v);
  }
  return out;
}

SymbolicCrit crit_md(std::int64_t k, std::int64_t d, std::size_t n, const ResidueClass& rc) {
  const auto nn = static_cast<std::int64_t>(n);
  if (n == 0) throw ValidationError("crit_md: need at least one variable");
  if (k < nn || k > d) throw ValidationError("crit_md: need n <= k <= d, got k = " + std::to_string(k));
  if (rc.d != d) throw ValidationError("crit_md: class modulus " + std::to_string(rc.d) + " differs from d = " + std::to_string(d));
  const std::int64_t period = mult_order(rc);
  std::int64_t rho_e = 1;
  for (std::int64_t e = 1; e <= period; ++e) {
    rho_e = lpr(rho_e * rc.rho, d);
    const std::int64_t x = lpr(k * rho_e, d);
    if (x < nn) return SymbolicCrit(k, d, ExtNat::finite(e), x);
  }
  return SymbolicCrit(k, d, ExtNat::infinity(), 0);
}

IdealFamily family_md(std::int64_t d, std::size_t n, const ResidueClass& rc) {
  if (d < 1) throw ValidationError("family_md: d must be positive");
  if (n == 0) throw ValidationError("family_md: need at least one variable");
  if (rc.d != d) throw ValidationError("family_md: class modulus " + std::to_string(rc.d) + " differs from d = " + std::to_string(d));
  IdealFamily fam;
  fam.label = "m^" + std::to_string(d) + "(" + std::to_string(n) + ")";
  fam.nvars = n;
  fam.rc = rc;
  fam.pmin = d + 1;
  for (auto k = static_cast<std::int64_t>(n); k < d; ++k)
    fam.pieces.push_back({crit_md(k, d, n, rc), power_of_m(k - static_cast<std::int64_t>(n) + 1, n)});
  check_family(fam);
  return fam;
}

DiagonalCrits::DiagonalCrits(const ExponentVector& dvec, const ResidueClass& rc) : weights_(dvec), rc_(rc) {
  if (rc_.d != weights_.lcm())
    throw ValidationError("class modulus " + std::to_string(rc_.d) + " differs from lcm" + dvec.to_string() + " = " +
                          std::to_string(weights_.lcm()));
  const std::int64_t period = mult_order(rc_);
  std::int64_t x = 1;
  for (std::int64_t e = 1; e <= period; ++e) {
    x = lpr(x * rc_.rho, rc_.d);
    rho_powers_.push_back(x);
  }
}

std::int64_t DiagonalCrits::pmin() const {
  const auto n = static_cast<std::int64_t>(nvars());
  return rc_.first_prime_at_least(n * lcm() - n + 1);
}

SymbolicCrit DiagonalCrits::compute(const ExponentVector& u) const {
  const std::int64_t d = lcm();
  if (!u.divides(weights_.dvec()) || weights_.deg(u) > d) return SymbolicCrit::one(d);
  const auto ubar = weights_.bar(u);
  for (std::size_t e = 0; e < rho_powers_.size(); ++e) {
    std::int64_t norm = 0;
    for (auto c : ubar) norm += lpr(rho_powers_[e] * c, d);
    if (norm > d) return SymbolicCrit(weights_.deg(u), d, ExtNat::finite(static_cast<std::int64_t>(e) + 1), norm - d);
  }
  return SymbolicCrit(weights_.deg(u), d, ExtNat::infinity(), 0);
}

SymbolicCrit DiagonalCrits::crit(const ExponentVector& u) {
  if (u.size() != nvars()) throw ValidationError("crit_diag: " + u.to_string() + " has the wrong number of coordinates");
  if (!u.all_positive()) throw ValidationError("crit_diag: u must have positive coordinates, got " + u.to_string());
  auto it = cache_.find(u);
  if (it == cache_.end()) it = cache_.emplace(u, compute(u)).first;
  return it->second;
}

MonomialIdeal DiagonalCrits::frobenius_power_at(const ExponentVector& u) {
  const auto lambda = crit(u);
  if (lambda.is_one()) throw ValidationError("frobpow_diag_at_crit: crit" + u.to_string() + " is not below 1");
  const std::int64_t k = weights_.deg(u);
  const std::int64_t deg_one = weights_.deg(ExponentVector::filled(nvars(), 1));
  auto base = R_gt(k - deg_one, weights_);

  std::vector<ExponentVector> candidates;
  ExponentVector cur(nvars());
  points_of_degree(weights_.weights(), k, 0, cur, candidates);
  std::vector<ExponentVector> extra;
  for (const auto& w : candidates) {
    if (crit(w) > lambda) {
      auto v = w;
      for (auto& x : v) x -= 1;
      extra.push_back(v);
    }
  }
  return sum(base, MonomialIdeal::from_generators(nvars(), std::move(extra)));
}

SymbolicCrit crit_diag(const ExponentVector& u, const ExponentVector& dvec, const ResidueClass& rc) {
  return DiagonalCrits(dvec, rc).crit(u);
}

MonomialIdeal frobpow_diag_at_crit(const ExponentVector& u, const ExponentVector& dvec, const ResidueClass& rc) {
  return DiagonalCrits(dvec, rc).frobenius_power_at(u);
}

namespace {

std::vector<ExponentVector> diagonal_points(const GradedWeights& w) {
  // 0 < u <= dvec with deg(u) <= d.
  std::vector<ExponentVector> out;
  const std::size_t n = w.nvars();
  ExponentVector u = ExponentVector::filled(n, 1);
  const std::int64_t d = w.lcm();
  std::int64_t deg = w.deg(u);
  if (deg > d) return out;
  while (true) {
    out.push_back(u);
    // Odometer increment, last coordinate fastest, skipping points over degree d.
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (u[i] < w.dvec()[i] && deg + w.weights()[i] <= d) {
        u[i] += 1;
        deg += w.weights()[i];
        break;
      }
      deg -= w.weights()[i] * (u[i] - 1);
      u[i] = 1;
      if (i == 0) return out;
    }
  }
}

}  // namespace

std::vector<std::pair<SymbolicCrit, ExponentVector>> crits_diag(const ExponentVector& dvec, const ResidueClass& rc,
                                                                unsigned threads) {
  DiagonalCrits table(dvec, rc);
  const auto points = diagonal_points(table.weights());
  std::vector<std::optional<SymbolicCrit>> values(points.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < points.size(); ++i) values[i] = table.crit(points[i]);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        DiagonalCrits local(dvec, rc);
        for (std::size_t i = w; i < points.size(); i += workers) values[i] = local.crit(points[i]);
      }));
    }
    for (auto& j : jobs) j.get();
  }
  std::map<SymbolicCrit, ExponentVector> first;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (values[i]->is_one()) continue;
    first.try_emplace(*values[i], points[i]);
  }
  return {first.begin(), first.end()};
}

IdealFamily family_diag(const ExponentVector& dvec, const ResidueClass& rc, const std::optional<CritWindow>& window,
                        unsigned threads) {
  DiagonalCrits table(dvec, rc);
  IdealFamily fam;
  fam.label = "diag" + dvec.to_string();
  fam.nvars = dvec.size();
  fam.rc = rc;
  fam.pmin = table.pmin();
  fam.window = window;
  for (const auto& [crit, u] : crits_diag(dvec, rc, threads)) {
    if (window && !window->contains(crit)) continue;
    fam.pieces.push_back({crit, table.frobenius_power_at(u)});
  }
  check_family(fam);
  return fam;
}

Rational eval_at_prime(const SymbolicCrit& crit, const ResidueClass& rc, std::int64_t pmin, std::int64_t p) {
  require_prime(p, "--at-p");
  if (!rc.contains(p))
    throw ValidationError("p = " + std::to_string(p) + " is not in the class " + rc.to_string());
  if (p < pmin)
    throw ValidationError("p = " + std::to_string(p) + " is below the admissibility bound pmin = " + std::to_string(pmin));
  return crit.eval(p);
}

EvaluatedFamily eval_at_prime(const IdealFamily& fam, std::int64_t p) {
  EvaluatedFamily out;
  out.label = fam.label;
  out.nvars = fam.nvars;
  out.p = p;
  eval_at_prime(SymbolicCrit::one(fam.rc.d), fam.rc, fam.pmin, p);
  for (const auto& piece : fam.pieces) out.pieces.push_back({piece.breakpoint.eval(p), piece.ideal});
  return out;
}

MonomialIdeal ideal_at(const EvaluatedFamily& fam, const Rational& t, const MonomialIdeal& base, bool skoda) {
  if (t < 0) throw ValidationError("t must be nonnegative, got " + to_string(t));
  if (t >= 1) {
    if (!skoda) throw ValidationError("t = " + to_string(t) + " is not below 1; pass --skoda to use the Skoda recurrence");
    return product(base, ideal_at(fam, t - 1, base, skoda));
  }
  auto result = MonomialIdeal::unit(fam.nvars);
  for (const auto& piece : fam.pieces) {
    if (piece.breakpoint > t) break;
    result = piece.ideal;
  }
  return result;
}

std::int64_t nu_md(std::int64_t k, std::int64_t d, std::size_t n, std::int64_t q) {
  const auto nn = static_cast<std::int64_t>(n);
  if (k < nn || k > d) throw ValidationError("nu_md: need n <= k <= d");
  // floor((k q - n) / d) with k q >= n.
  return (k * q - nn) / d;
}

std::int64_t mu_md(std::int64_t k, std::int64_t d, std::size_t n, std::int64_t p, std::int64_t e) {
  const auto nn = static_cast<std::int64_t>(n);
  if (k < nn || k > d) throw ValidationError("mu_md: need n <= k <= d");
  require_prime(p);
  if (e < 1) throw ValidationError("mu_md: e must be positive");
  std::int64_t q = 1;
  for (std::int64_t j = 1; j <= e; ++j) {
    q = checked_pow(p, j);
    const std::int64_t r = lpr(k * (q % d), d);
    if (r < nn) {
      const std::int64_t at_s = (k * q - r) / d - 1;
      const std::int64_t rest = checked_pow(p, e - j);
      return (at_s + 1) * rest - 1;
    }
  }
  return (k * q - lpr(k * (q % d), d)) / d;
}

std::int64_t mu_diag(const ExponentVector& u, const ExponentVector& dvec, std::int64_t p, std::int64_t e) {
  const GradedWeights w(dvec);
  if (u.size() != dvec.size() || !u.all_positive() || !u.divides(dvec))
    throw ValidationError("mu_diag: need 0 < u <= dvec, got " + u.to_string());
  require_prime(p);
  const std::int64_t d = w.lcm();
  const auto n = static_cast<std::int64_t>(dvec.size());
  if (p <= n * d - n || d % p == 0)
    throw ValidationError("mu_diag: p = " + std::to_string(p) + " needs p > n d - n = " + std::to_string(n * d - n));
  if (e < 1) throw ValidationError("mu_diag: e must be positive");
  const std::int64_t Q = checked_pow(p, e);
  const std::int64_t k = w.deg(u);
  if (k > d) return Q - 1;
  const auto ubar = w.bar(u);
  for (std::int64_t j = 1; j <= e; ++j) {
    const std::int64_t q = checked_pow(p, j);
    std::int64_t norm = 0;
    for (auto c : ubar) norm += lpr(c * (q % d), d);
    if (norm > d || j == e) {
      const std::int64_t at = (k * q - norm) / d;
      if (j == e) return at;
      return (at + 1) * checked_pow(p, e - j) - 1;
    }
  }
  throw InternalError("mu_diag: unreachable");
}

}  // namespace frobpow::closedform
