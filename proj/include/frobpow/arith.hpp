#pragma once

// Exact integer and rational helpers: least positive residues, base-p digits,
// Dickson's carry-free test, residue classes of the characteristic.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobpow/exponent_vector.hpp"

namespace frobpow {

/// Exact rational in canonical (reduced, positive denominator) form.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Builds num/den and canonicalizes. Throws ValidationError when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "a/b" or "a".
Rational parse_rational(const std::string& text);

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& r);

/// Least positive residue of m modulo d: the representative in [1, d].
/// Multiples of d map to d, never to 0.
std::int64_t lpr(std::int64_t m, std::int64_t d);

ExponentVector lpr_vec(const ExponentVector& u, std::int64_t d);

/// Base-p digits of m, least significant first. Empty for m == 0.
std::vector<std::int64_t> base_p_digits(std::int64_t m, std::int64_t p);

/// True iff the coordinates of s add in base p without carrying, i.e. the
/// multinomial coefficient (|s| choose s) is nonzero mod p (Dickson).
bool carry_free(const ExponentVector& s, std::int64_t p);

/// Trial-division primality; values above `bound` are rejected with a
/// ValidationError rather than tested.
bool is_prime(std::int64_t m, std::int64_t bound = 100'000'000);

/// Throws ValidationError unless p is prime.
void require_prime(std::int64_t p, const std::string& what = "p");

/// p^e, throwing ResourceError on int64 overflow.
std::int64_t checked_pow(std::int64_t p, std::int64_t e);

/// If q is a power of p (q = p^e, e >= 0) returns e.
std::optional<std::int64_t> log_p(std::int64_t q, std::int64_t p);

std::int64_t lcm_of(const ExponentVector& v);

/// Either a positive integer or infinity.
class ExtNat {
 public:
  static ExtNat infinity() { return ExtNat(); }
  static ExtNat finite(std::int64_t v);

  bool is_infinite() const { return !value_; }
  bool is_finite() const { return value_.has_value(); }
  /// Throws InternalError when infinite.
  std::int64_t value() const;

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b);
  friend bool operator==(const ExtNat& a, const ExtNat& b) = default;

 private:
  ExtNat() = default;
  std::optional<std::int64_t> value_;
};

/// The class of p modulo d, represented by rho in [1, d] with gcd(rho, d) = 1.
struct ResidueClass {
  std::int64_t d = 1;
  std::int64_t rho = 1;

  /// Validates and canonicalizes rho into [1, d].
  static ResidueClass make(std::int64_t rho, std::int64_t d);
  /// The class of a concrete prime.
  static ResidueClass of_prime(std::int64_t p, std::int64_t d);
  /// Parses "rho%d".
  static ResidueClass parse(const std::string& text);

  bool contains(std::int64_t p) const { return lpr(p, d) == rho; }
  /// Smallest prime in the class.
  std::int64_t smallest_prime() const;
  /// Smallest prime in the class that is >= lower.
  std::int64_t first_prime_at_least(std::int64_t lower) const;
  std::string to_string() const;

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

/// Least e >= 1 with rho^e = 1 mod d.
std::int64_t mult_order(const ResidueClass& rc);

}  // namespace frobpow
