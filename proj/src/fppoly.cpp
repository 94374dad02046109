#include "frobpow/fppoly.hpp"

#include <algorithm>

#include "frobpow/arith.hpp"
#include "frobpow/errors.hpp"

namespace frobpow {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

void check_budget(const FpPolynomial& f, const PolyBudget& budget) {
  if (f.size() > budget.max_terms)
    throw ResourceError("polynomial term budget " + std::to_string(budget.max_terms) + " exceeded");
}

void require_same_ring(const FpPolynomial& a, const FpPolynomial& b) {
  if (a.p() != b.p() || a.nvars() != b.nvars()) throw ValidationError("polynomials live in different rings");
}

// Weak compositions of `total` into `parts` parts.
void splits(std::int64_t total, std::size_t parts, std::vector<std::vector<std::int64_t>>& out) {
  for (const auto& v : weak_compositions(total, parts)) out.emplace_back(v.begin(), v.end());
}

}  // namespace

FpPolynomial::FpPolynomial(std::int64_t p, std::size_t n) : p_(p), n_(n) {
  require_prime(p_);
  if (n_ > ExponentVector::kMaxVars) throw ValidationError("too many variables");
}

FpPolynomial FpPolynomial::constant(std::int64_t p, std::size_t n, std::int64_t c) {
  FpPolynomial f(p, n);
  f.add_term(ExponentVector(n), c);
  return f;
}

FpPolynomial FpPolynomial::monomial(std::int64_t p, const ExponentVector& v, std::int64_t c) {
  FpPolynomial f(p, v.size());
  f.add_term(v, c);
  return f;
}

void FpPolynomial::add_term(const ExponentVector& v, std::int64_t c) {
  if (v.size() != n_) throw ValidationError("term " + v.to_string() + " has the wrong number of variables");
  c = mod(c, p_);
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(v, c);
  if (!fresh) {
    it->second = (it->second + c) % p_;
    if (it->second == 0) terms_.erase(it);
  }
}

bool FpPolynomial::is_diagonal() const {
  std::vector<bool> used(n_, false);
  for (const auto& [v, c] : terms_) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (v[i] != 0) {
        ++support;
        var = i;
      }
    if (support != 1 || used[var]) return false;
    used[var] = true;
  }
  return true;
}

std::string FpPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [v, c] = *it;
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      if (v[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (v[i] > 1) mono += "^" + std::to_string(v[i]);
    }
    if (mono.empty())
      out += std::to_string(c);
    else
      out += c == 1 ? mono : std::to_string(c) + "*" + mono;
  }
  return out;
}

FpPolynomial operator+(const FpPolynomial& a, const FpPolynomial& b) {
  require_same_ring(a, b);
  FpPolynomial out = a;
  for (const auto& [v, c] : b.terms()) out.add_term(v, c);
  return out;
}

FpPolynomial multiply(const FpPolynomial& a, const FpPolynomial& b, const PolyBudget& budget) {
  require_same_ring(a, b);
  FpPolynomial out(a.p(), a.nvars());
  for (const auto& [va, ca] : a.terms()) {
    for (const auto& [vb, cb] : b.terms()) out.add_term(va + vb, ca * cb);
    check_budget(out, budget);
  }
  return out;
}

FpPolynomial poly_pow_squaring(const FpPolynomial& f, std::int64_t m, const PolyBudget& budget) {
  if (m < 0) throw ValidationError("exponent must be nonnegative");
  FpPolynomial result = FpPolynomial::constant(f.p(), f.nvars(), 1);
  FpPolynomial base = f;
  while (m > 0) {
    if (m & 1) result = multiply(result, base, budget);
    m >>= 1;
    if (m > 0) base = multiply(base, base, budget);
  }
  return result;
}

FpPolynomial poly_pow_multinomial(const FpPolynomial& f, std::int64_t m, const PolyBudget& budget) {
  if (m < 0) throw ValidationError("exponent must be nonnegative");
  const std::int64_t p = f.p();
  FpPolynomial out(p, f.nvars());
  if (m == 0) return FpPolynomial::constant(p, f.nvars(), 1);
  if (f.is_zero()) return out;

  std::vector<ExponentVector> exps;
  std::vector<std::int64_t> coeffs;
  for (const auto& [v, c] : f.terms()) {
    exps.push_back(v);
    coeffs.push_back(c);
  }
  const std::size_t l = exps.size();

  std::vector<std::int64_t> fact(p, 1), inv_fact(p, 1);
  for (std::int64_t i = 1; i < p; ++i) fact[i] = fact[i - 1] * i % p;
  for (std::int64_t i = 0; i < p; ++i) inv_fact[i] = pow_mod(fact[i], p - 2, p);

  // u ranges over carry-free compositions: choose a split of every base-p
  // digit of m independently (Lucas: the multinomial is the product of the
  // digit multinomials, all nonzero).
  const auto digits = base_p_digits(m, p);
  std::vector<std::vector<std::vector<std::int64_t>>> choices(digits.size());
  for (std::size_t j = 0; j < digits.size(); ++j) splits(digits[j], l, choices[j]);

  std::vector<std::size_t> idx(digits.size(), 0);
  while (true) {
    std::int64_t coef = 1;
    std::vector<std::int64_t> u(l, 0);
    std::int64_t weight = 1;
    for (std::size_t j = 0; j < digits.size(); ++j) {
      const auto& part = choices[j][idx[j]];
      coef = coef * fact[digits[j]] % p;
      for (std::size_t i = 0; i < l; ++i) {
        coef = coef * inv_fact[part[i]] % p;
        u[i] += part[i] * weight;
      }
      weight *= p;
    }
    ExponentVector v(f.nvars());
    for (std::size_t i = 0; i < l; ++i) {
      coef = coef * pow_mod(coeffs[i], u[i], p) % p;
      v += u[i] * exps[i];
    }
    out.add_term(v, coef);
    check_budget(out, budget);

    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == choices[j].size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  return out;
}

FpPolynomial poly_pow(const FpPolynomial& f, std::int64_t m, const PolyBudget& budget) {
  return f.is_diagonal() ? poly_pow_multinomial(f, m, budget) : poly_pow_squaring(f, m, budget);
}

FpPolynomial bracket(const FpPolynomial& f, std::int64_t q) {
  FpPolynomial out(f.p(), f.nvars());
  for (const auto& [v, c] : f.terms()) out.add_term(q * v, c);
  return out;
}

std::vector<RootBucket> frob_root_principal(const FpPolynomial& f, std::int64_t q) {
  if (!log_p(q, f.p())) throw ValidationError("q = " + std::to_string(q) + " is not a power of p = " + std::to_string(f.p()));
  std::map<ExponentVector, FpPolynomial> buckets;
  for (const auto& [v, c] : f.terms()) {
    ExponentVector mu(v.size()), root(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      mu[i] = v[i] % q;
      root[i] = v[i] / q;
    }
    buckets.try_emplace(mu, f.p(), f.nvars()).first->second.add_term(root, c);
  }
  std::vector<RootBucket> out;
  for (auto& [mu, g] : buckets) out.push_back({mu, std::move(g)});
  return out;
}

TestIdeal test_ideal(const FpPolynomial& f, std::int64_t m, std::int64_t q, const PolyBudget& budget) {
  if (m < 0) throw ValidationError("m must be nonnegative");
  TestIdeal out;
  out.buckets = frob_root_principal(poly_pow(f, m, budget), q);
  const bool monomial = std::all_of(out.buckets.begin(), out.buckets.end(), [](const auto& b) { return b.root.is_term(); });
  if (monomial) {
    std::vector<ExponentVector> gens;
    for (const auto& b : out.buckets) gens.push_back(b.root.terms().begin()->first);
    out.monomial = MonomialIdeal::from_generators(f.nvars(), std::move(gens));
  }
  return out;
}

}  // namespace frobpow
