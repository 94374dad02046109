#include "frobpow/ideal.hpp"

#include <algorithm>
#include <functional>

#include "frobpow/errors.hpp"

namespace frobpow {

namespace {

void require_same_vars(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (i.nvars() != j.nvars())
    throw ValidationError("ideals live in different rings (" + std::to_string(i.nvars()) + " vs " +
                          std::to_string(j.nvars()) + " variables)");
}

std::string monomial_to_string(const ExponentVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (v[i] != 1) s += "^" + std::to_string(v[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

std::vector<ExponentVector> minimal_elements(std::vector<ExponentVector> gens) {
  std::vector<std::pair<ExponentVector::value_type, ExponentVector>> by_norm;
  by_norm.reserve(gens.size());
  for (auto& g : gens) by_norm.emplace_back(g.norm(), g);
  std::sort(by_norm.begin(), by_norm.end());
  by_norm.erase(std::unique(by_norm.begin(), by_norm.end()), by_norm.end());

  // A proper divisor has strictly smaller norm, so each candidate only needs
  // checking against kept elements of smaller norm.
  std::vector<std::pair<ExponentVector::value_type, ExponentVector>> kept;
  for (const auto& [norm, g] : by_norm) {
    bool dominated = false;
    for (const auto& [knorm, k] : kept) {
      if (knorm >= norm) break;
      if (k.divides(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.emplace_back(norm, g);
  }

  std::vector<ExponentVector> out;
  out.reserve(kept.size());
  for (auto& kv : kept) out.push_back(kv.second);
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
  MonomialIdeal i(n);
  i.gens_.push_back(ExponentVector(n));
  return i;
}

MonomialIdeal MonomialIdeal::from_generators(std::size_t n, std::vector<ExponentVector> gens) {
  for (const auto& g : gens) {
    if (g.size() != n)
      throw ValidationError("generator " + g.to_string() + " does not have " + std::to_string(n) +
                            " coordinates");
    for (auto c : g)
      if (c < 0) throw ValidationError("negative exponent in generator " + g.to_string());
  }
  MonomialIdeal i(n);
  i.gens_ = minimal_elements(std::move(gens));
  return i;
}

bool MonomialIdeal::contains(const ExponentVector& v) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return g.divides(v); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_vars(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const ExponentVector& g) { return contains(g); });
}

std::string MonomialIdeal::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) {
    if (!s.empty()) s += ", ";
    s += monomial_to_string(*it);
  }
  return s;
}

MonomialIdeal sum(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_same_vars(i, j);
  auto gens = i.generators();
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return MonomialIdeal::from_generators(i.nvars(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& i, const MonomialIdeal& j, const Absorber& absorb) {
  require_same_vars(i, j);
  std::vector<ExponentVector> gens;
  gens.reserve(i.generators().size() * j.generators().size());
  for (const auto& a : i.generators())
    for (const auto& b : j.generators()) {
      auto s = a + b;
      if (!absorb.absorbs(s)) gens.push_back(s);
    }
  return MonomialIdeal::from_generators(i.nvars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& i, std::int64_t m, const Absorber& absorb) {
  if (m < 0) throw ValidationError("power: negative exponent");
  auto result = MonomialIdeal::unit(i.nvars());
  if (absorb.absorbs(ExponentVector(i.nvars()))) return MonomialIdeal::zero(i.nvars());
  for (std::int64_t k = 0; k < m; ++k) {
    result = product(result, i, absorb);
    if (result.is_zero()) break;
  }
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_same_vars(i, j);
  std::vector<ExponentVector> gens;
  for (const auto& a : i.generators())
    for (const auto& b : j.generators()) {
      ExponentVector m(i.nvars());
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::max(a[k], b[k]);
      gens.push_back(m);
    }
  return MonomialIdeal::from_generators(i.nvars(), std::move(gens));
}

MonomialIdeal bracket_power(const MonomialIdeal& i, std::int64_t q) {
  if (q < 1) throw ValidationError("bracket_power: q must be positive");
  std::vector<ExponentVector> gens;
  for (const auto& g : i.generators()) gens.push_back(q * g);
  return MonomialIdeal::from_generators(i.nvars(), std::move(gens));
}

MonomialIdeal bracket_root(const MonomialIdeal& i, std::int64_t q) {
  if (q < 1) throw ValidationError("bracket_root: q must be positive");
  std::vector<ExponentVector> gens;
  for (const auto& g : i.generators()) {
    ExponentVector f(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) f[k] = g[k] / q;
    gens.push_back(f);
  }
  return MonomialIdeal::from_generators(i.nvars(), std::move(gens));
}

MonomialIdeal frob_power_int(const MonomialIdeal& i, std::int64_t m, std::int64_t p, const Absorber& absorb) {
  if (m < 0) throw ValidationError("frob_power_int: negative exponent");
  const auto digits = base_p_digits(m, p);
  std::vector<MonomialIdeal> factors;
  std::int64_t scale = 1;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    if (digits[j] != 0) {
      auto f = bracket_power(power(i, digits[j], absorb.scaled(scale)), scale);
      if (f.is_zero()) return MonomialIdeal::zero(i.nvars());
      factors.push_back(std::move(f));
    }
    if (j + 1 < digits.size()) scale = checked_pow(p, static_cast<std::int64_t>(j + 1));
  }
  std::sort(factors.begin(), factors.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.generators().size() < b.generators().size();
  });
  auto result = MonomialIdeal::unit(i.nvars());
  if (absorb.absorbs(ExponentVector(i.nvars()))) return MonomialIdeal::zero(i.nvars());
  for (const auto& f : factors) {
    result = product(result, f, absorb);
    if (result.is_zero()) break;
  }
  return result;
}

MonomialIdeal frob_power_gens(const MonomialIdeal& i, std::int64_t m, std::int64_t p, std::int64_t cap) {
  if (m < 0) throw ValidationError("frob_power_gens: negative exponent");
  const auto& h = i.generators();
  const std::size_t l = h.size();
  if (l == 0) return m == 0 ? MonomialIdeal::unit(i.nvars()) : MonomialIdeal::zero(i.nvars());
  if (l > ExponentVector::kMaxVars)
    throw ResourceError("frob_power_gens: more than " + std::to_string(ExponentVector::kMaxVars) + " generators");

  std::vector<ExponentVector> gens;
  std::int64_t visited = 0;
  ExponentVector s(l);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t left) {
    if (k + 1 == l) {
      s[k] = left;
      if (++visited > cap) throw ResourceError("frob_power_gens: enumeration cap exceeded");
      if (!carry_free(s, p)) return;
      ExponentVector g(i.nvars());
      for (std::size_t t = 0; t < l; ++t) g += s[t] * h[t];
      gens.push_back(g);
      return;
    }
    for (std::int64_t c = 0; c <= left; ++c) {
      s[k] = c;
      rec(k + 1, left - c);
    }
  };
  rec(0, m);
  return MonomialIdeal::from_generators(i.nvars(), std::move(gens));
}

MonomialIdeal frob_power_rational(const MonomialIdeal& i, std::int64_t m, std::int64_t q, std::int64_t p) {
  if (!log_p(q, p)) throw ValidationError(std::to_string(q) + " is not a power of p = " + std::to_string(p));
  return bracket_root(frob_power_int(i, m, p), q);
}

MonomialIdeal diag(const ExponentVector& u) {
  if (!u.all_positive()) throw ValidationError("diag: exponents must be positive, got " + u.to_string());
  std::vector<ExponentVector> gens;
  for (std::size_t k = 0; k < u.size(); ++k) gens.push_back(ExponentVector::unit(u.size(), k, u[k]));
  return MonomialIdeal::from_generators(u.size(), std::move(gens));
}

std::vector<ExponentVector> weak_compositions(std::int64_t k, std::size_t n) {
  std::vector<ExponentVector> out;
  if (n == 0 || k < 0) return out;
  ExponentVector v(n);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i + 1 == n) {
      v[i] = left;
      out.push_back(v);
      return;
    }
    for (std::int64_t c = 0; c <= left; ++c) {
      v[i] = c;
      rec(i + 1, left - c);
    }
  };
  rec(0, k);
  return out;
}

MonomialIdeal power_of_m(std::int64_t d, std::size_t n) {
  if (d < 0) throw ValidationError("power_of_m: negative exponent");
  return MonomialIdeal::from_generators(n, weak_compositions(d, n));
}

GradedWeights::GradedWeights(const ExponentVector& dvec) : dvec_(dvec), weights_(dvec.size()) {
  if (dvec.size() == 0) throw ValidationError("GradedWeights: need at least one variable");
  if (!dvec.all_positive()) throw ValidationError("GradedWeights: exponents must be positive, got " + dvec.to_string());
  d_ = lcm_of(dvec);
  for (std::size_t i = 0; i < dvec.size(); ++i) weights_[i] = d_ / dvec[i];
}

std::int64_t GradedWeights::deg(const ExponentVector& u) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += weights_[i] * u[i];
  return s;
}

ExponentVector GradedWeights::bar(const ExponentVector& u) const {
  ExponentVector b(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) b[i] = weights_[i] * u[i];
  return b;
}

bool GradedWeights::balanced() const {
  return std::all_of(weights_.begin(), weights_.end(), [](auto w) { return w == 1; });
}

MonomialIdeal R_gt(std::int64_t m, const GradedWeights& w) {
  const std::size_t n = w.nvars();
  if (m < 0) return MonomialIdeal::unit(n);
  const auto& wt = w.weights();
  std::vector<ExponentVector> gens;
  ExponentVector v(n);
  // Once the partial degree exceeds m, any further positive coordinate x_j
  // would leave deg(v) - w_j > m, so v could not be minimal.
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t partial) {
    if (i == n) {
      if (partial <= m) return;
      for (std::size_t k = 0; k < n; ++k)
        if (v[k] > 0 && partial - wt[k] > m) return;
      gens.push_back(v);
      return;
    }
    if (partial > m) {
      v[i] = 0;
      rec(i + 1, partial);
      return;
    }
    const std::int64_t top = (m - partial) / wt[i] + 1;
    for (std::int64_t c = 0; c <= top; ++c) {
      v[i] = c;
      rec(i + 1, partial + c * wt[i]);
    }
    v[i] = 0;
  };
  rec(0, 0);
  return MonomialIdeal::from_generators(n, std::move(gens));
}

}  // namespace frobpow
