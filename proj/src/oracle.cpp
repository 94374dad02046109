#include "frobpow/oracle.hpp"

#include <algorithm>
#include <limits>

#include "frobpow/errors.hpp"

namespace frobpow::oracle {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Is there a + b (a in x, b in y) outside the absorbing ideal?
bool product_escapes(const MonomialIdeal& x, const MonomialIdeal& y, const MonomialIdeal& target) {
  const auto& small = x.generators().size() <= y.generators().size() ? x : y;
  const auto& large = &small == &x ? y : x;
  for (const auto& b : small.generators())
    for (const auto& a : large.generators())
      if (!target.contains(a + b)) return true;
  return false;
}

std::int64_t default_cap(const InvariantQuery& query) {
  const std::int64_t nu1 = nu(query.with_q(1), OracleConfig{std::numeric_limits<std::int64_t>::max()});
  return query.q() * (nu1 + 2);
}

}  // namespace

std::optional<std::int64_t> radical_exponent(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::int64_t worst = 0;
  for (const auto& g : a.generators()) {
    std::optional<std::int64_t> best;
    for (const auto& h : b.generators()) {
      std::int64_t need = 1;
      bool ok = true;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (h[i] == 0) continue;
        if (g[i] == 0) {
          ok = false;
          break;
        }
        need = std::max(need, ceil_div(h[i], g[i]));
      }
      if (ok && (!best || need < *best)) best = need;
    }
    if (!best) return std::nullopt;
    worst = std::max(worst, *best);
  }
  return std::max<std::int64_t>(worst, 1);
}

InvariantQuery::InvariantQuery(MonomialIdeal a, MonomialIdeal b, std::int64_t q, std::int64_t p)
    : a_(std::move(a)), b_(std::move(b)), q_(q), p_(p) {
  require_prime(p_);
  if (!log_p(q_, p_)) throw ValidationError("q = " + std::to_string(q_) + " is not a power of p = " + std::to_string(p_));
  if (a_.nvars() != b_.nvars()) throw ValidationError("a and b live in different rings");
  if (a_.is_zero()) throw ValidationError("a must be nonzero");
  if (a_.is_unit()) throw ValidationError("a must be proper");
  if (b_.is_unit()) throw ValidationError("b must be proper");
  if (!radical_exponent(a_, b_))
    throw ValidationError("a = <" + a_.to_string() + "> is not contained in the radical of b = <" + b_.to_string() + ">");
}

FrobeniusEscape::FrobeniusEscape(MonomialIdeal a, MonomialIdeal target, std::int64_t p)
    : a_(std::move(a)), target_(std::move(target)), p_(p) {}

const MonomialIdeal& FrobeniusEscape::factor(std::size_t position, std::int64_t digit) {
  const auto key = std::make_pair(position, digit);
  auto it = factors_.find(key);
  if (it == factors_.end()) {
    const std::int64_t scale = checked_pow(p_, static_cast<std::int64_t>(position));
    auto f = bracket_power(power(a_, digit, Absorber{&target_, scale}), scale);
    it = factors_.emplace(key, std::move(f)).first;
  }
  return it->second;
}

bool FrobeniusEscape::escapes(std::int64_t m) {
  const auto digits = base_p_digits(m, p_);
  std::vector<const MonomialIdeal*> parts;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    if (digits[j] == 0) continue;
    const auto& f = factor(j, digits[j]);
    if (f.is_zero()) return false;
    parts.push_back(&f);
  }
  if (parts.empty()) return !target_.contains(ExponentVector(a_.nvars()));
  if (parts.size() == 1) return !parts.front()->is_zero();
  std::sort(parts.begin(), parts.end(), [](auto* x, auto* y) { return x->generators().size() < y->generators().size(); });
  // Multiply all but the largest factor with absorption, then only ask
  // whether some generator of the last product escapes.
  MonomialIdeal acc = *parts.front();
  const Absorber absorb{&target_, 1};
  for (std::size_t k = 1; k + 1 < parts.size(); ++k) {
    acc = product(acc, *parts[k], absorb);
    if (acc.is_zero()) return false;
  }
  return product_escapes(acc, *parts.back(), target_);
}

std::int64_t mu(const InvariantQuery& query, const OracleConfig& cfg) {
  const std::int64_t cap = cfg.search_cap > 0 ? cfg.search_cap : default_cap(query);
  FrobeniusEscape search(query.a(), bracket_power(query.b(), query.q()), query.p());
  // a^[m] shrinks as m grows, so the first contained m ends the search.
  for (std::int64_t m = 0; m <= cap; ++m)
    if (!search.escapes(m)) return m - 1;
  throw ResourceError("mu: search cap " + std::to_string(cap) + " exceeded");
}

std::int64_t nu(const InvariantQuery& query, const OracleConfig& cfg) {
  const auto target = bracket_power(query.b(), query.q());
  const Absorber absorb{&target, 1};
  std::int64_t cap = cfg.search_cap;
  if (cap <= 0) {
    // x^(r q g) lies in b^[q] for every generator g, so by pigeonhole any
    // product of l (r q - 1) + 1 generators does too.
    const auto r = *radical_exponent(query.a(), query.b());
    const auto l = static_cast<std::int64_t>(query.a().generators().size());
    cap = l * r * query.q() + 1;
  }
  auto current = MonomialIdeal::unit(query.a().nvars());
  for (std::int64_t m = 1; m <= cap; ++m) {
    current = product(current, query.a(), absorb);
    if (current.is_zero()) return m - 1;
  }
  throw ResourceError("nu: search cap " + std::to_string(cap) + " exceeded");
}

std::vector<Rational> crit_truncations(const MonomialIdeal& a, const MonomialIdeal& b, std::int64_t p,
                                       std::int64_t max_e, const OracleConfig& cfg) {
  std::vector<Rational> out;
  for (std::int64_t e = 1; e <= max_e; ++e) {
    const std::int64_t q = checked_pow(p, e);
    out.push_back(make_rational(mu(InvariantQuery(a, b, q, p), cfg), q));
  }
  return out;
}

ExponentVector diag_mu_cap(const ExponentVector& u, std::int64_t q, std::int64_t d) {
  ExponentVector cap(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) cap[i] = (q * u[i] - lpr(q * u[i], d)) / d;
  return cap;
}

std::int64_t mu_diag_fast(const ExponentVector& u, std::int64_t q, std::int64_t d, std::int64_t p) {
  if (!u.all_positive()) throw ValidationError("mu_diag_fast: u must be positive, got " + u.to_string());
  if (d < 1) throw ValidationError("mu_diag_fast: d must be positive");
  require_prime(p);
  const std::size_t n = u.size();
  const auto cap = diag_mu_cap(u, q, d);

  std::size_t positions = 0;
  std::vector<std::vector<std::int64_t>> digits(n);
  for (std::size_t i = 0; i < n; ++i) {
    digits[i] = base_p_digits(cap[i], p);
    positions = std::max(positions, digits[i].size());
  }
  for (auto& dg : digits) dg.resize(positions, 0);

  // best[mask] = largest value of the lower positions given which coordinates
  // are still tight against the cap entering them. Masks only shrink going
  // down, and at each position the digit sum is at most p - 1.
  const std::size_t masks = std::size_t{1} << n;
  constexpr std::int64_t kInfeasible = std::numeric_limits<std::int64_t>::min();
  std::vector<std::int64_t> best(masks, 0);
  std::int64_t weight = 1;
  for (std::size_t j = 0; j < positions; ++j) {
    std::vector<std::int64_t> next(masks, kInfeasible);
    for (std::size_t mask = 0; mask < masks; ++mask) {
      for (std::size_t sub = mask;; sub = (sub - 1) & mask) {
        // `sub` = coordinates that stay tight, fixed to the cap digit.
        std::int64_t forced = 0, upper = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
          const std::int64_t c = digits[i][j];
          if (sub >> i & 1) {
            forced += c;
            upper += c;
          } else if (mask >> i & 1) {
            if (c == 0) {
              ok = false;
              break;
            }
            upper += c - 1;
          } else {
            upper += p - 1;
          }
        }
        if (ok && forced <= p - 1 && best[sub] != kInfeasible) {
          const std::int64_t v = std::min(p - 1, upper) * weight + best[sub];
          next[mask] = std::max(next[mask], v);
        }
        if (sub == 0) break;
      }
    }
    best = std::move(next);
    if (j + 1 < positions) weight *= p;
  }
  const std::int64_t result = best[masks - 1];
  if (result == kInfeasible) throw InternalError("mu_diag_fast: no feasible digit assignment");
  return result;
}

}  // namespace frobpow::oracle
