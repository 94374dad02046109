#include "frobpow/arith.hpp"

#include <limits>
#include <numeric>

#include "frobpow/errors.hpp"

namespace frobpow {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed rational '" + text + "'");
  }
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::int64_t lpr(std::int64_t m, std::int64_t d) {
  if (d < 1) throw ValidationError("lpr: modulus must be positive");
  std::int64_t r = m % d;
  if (r <= 0) r += d;
  return r;
}

ExponentVector lpr_vec(const ExponentVector& u, std::int64_t d) {
  ExponentVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = lpr(u[i], d);
  return out;
}

std::vector<std::int64_t> base_p_digits(std::int64_t m, std::int64_t p) {
  if (m < 0) throw ValidationError("base_p_digits: negative input");
  if (p < 2) throw ValidationError("base_p_digits: base must be at least 2");
  std::vector<std::int64_t> digits;
  while (m > 0) {
    digits.push_back(m % p);
    m /= p;
  }
  return digits;
}

bool carry_free(const ExponentVector& s, std::int64_t p) {
  ExponentVector rest = s;
  while (!rest.is_zero()) {
    std::int64_t digit_sum = 0;
    for (auto& c : rest) {
      digit_sum += c % p;
      c /= p;
    }
    if (digit_sum > p - 1) return false;
  }
  return true;
}

bool is_prime(std::int64_t m, std::int64_t bound) {
  if (m > bound)
    throw ValidationError("primality check bound " + std::to_string(bound) + " exceeded by " +
                          std::to_string(m));
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (std::int64_t f = 3; f * f <= m; f += 2)
    if (m % f == 0) return false;
  return true;
}

void require_prime(std::int64_t p, const std::string& what) {
  if (!is_prime(p)) throw ValidationError(what + " = " + std::to_string(p) + " is not prime");
}

std::int64_t checked_pow(std::int64_t p, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / p)
      throw ResourceError(std::to_string(p) + "^" + std::to_string(e) + " overflows 64 bits");
    r *= p;
  }
  return r;
}

std::optional<std::int64_t> log_p(std::int64_t q, std::int64_t p) {
  if (q < 1 || p < 2) return std::nullopt;
  std::int64_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return e;
}

std::int64_t lcm_of(const ExponentVector& v) {
  std::int64_t l = 1;
  for (auto c : v) {
    if (c <= 0) throw ValidationError("lcm_of: coordinates must be positive");
    l = std::lcm(l, c);
  }
  return l;
}

ExtNat ExtNat::finite(std::int64_t v) {
  if (v < 1) throw ValidationError("ExtNat: finite values must be >= 1");
  ExtNat e;
  e.value_ = v;
  return e;
}

std::int64_t ExtNat::value() const {
  if (!value_) throw InternalError("ExtNat::value() on infinity");
  return *value_;
}

std::string ExtNat::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  return *a.value_ <=> *b.value_;
}

ResidueClass ResidueClass::make(std::int64_t rho, std::int64_t d) {
  if (d < 1) throw ValidationError("residue class modulus must be positive");
  const std::int64_t r = lpr(rho, d);
  if (std::gcd(r, d) != 1)
    throw ValidationError("residue class " + std::to_string(rho) + "%" + std::to_string(d) +
                          " is not coprime to the modulus");
  return ResidueClass{d, r};
}

ResidueClass ResidueClass::of_prime(std::int64_t p, std::int64_t d) {
  require_prime(p);
  if (d > 1 && d % p == 0)
    throw ValidationError("p = " + std::to_string(p) + " divides d = " + std::to_string(d));
  return make(p, d);
}

ResidueClass ResidueClass::parse(const std::string& text) {
  const auto pct = text.find('%');
  if (pct == std::string::npos) throw ValidationError("residue class must be written rho%d, got '" + text + "'");
  try {
    std::size_t used = 0;
    const auto rho = std::stoll(text.substr(0, pct), &used);
    if (used != pct) throw std::invalid_argument("trailing");
    const auto rest = text.substr(pct + 1);
    const auto d = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing");
    return make(rho, d);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ValidationError*>(&e)) throw;
    throw ValidationError("malformed residue class '" + text + "'");
  }
}

std::int64_t ResidueClass::smallest_prime() const { return first_prime_at_least(2); }

std::int64_t ResidueClass::first_prime_at_least(std::int64_t lower) const {
  std::int64_t p = lower + (rho - lpr(lower, d));
  if (p < lower) p += d;
  // Dirichlet guarantees termination; gcd(rho, d) = 1 is a class invariant.
  while (!is_prime(p)) p += d;
  return p;
}

std::string ResidueClass::to_string() const { return std::to_string(rho) + "%" + std::to_string(d); }

std::int64_t mult_order(const ResidueClass& rc) {
  if (std::gcd(rc.rho, rc.d) != 1) throw ValidationError("mult_order: rho not a unit mod d");
  const std::int64_t one = lpr(1, rc.d);
  std::int64_t x = lpr(rc.rho, rc.d);
  std::int64_t e = 1;
  while (x != one) {
    x = lpr(x * rc.rho, rc.d);
    ++e;
  }
  return e;
}

}  // namespace frobpow
