#pragma once

// Sparse polynomials over the prime field F_p, Frobenius roots of principal
// ideals, and test ideals tau(f^(m/q)) = <f^m>^[1/q].

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobpow/exponent_vector.hpp"
#include "frobpow/ideal.hpp"

namespace frobpow {

class FpPolynomial {
 public:
  /// The zero polynomial in n variables over F_p.
  FpPolynomial(std::int64_t p, std::size_t n);

  static FpPolynomial constant(std::int64_t p, std::size_t n, std::int64_t c);
  static FpPolynomial monomial(std::int64_t p, const ExponentVector& v, std::int64_t c = 1);

  std::int64_t p() const { return p_; }
  std::size_t nvars() const { return n_; }
  /// Exponent -> coefficient in [1, p-1].
  const std::map<ExponentVector, std::int64_t>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_term() const { return terms_.size() == 1; }

  /// Adds c x^v, reducing c mod p.
  void add_term(const ExponentVector& v, std::int64_t c);

  /// Each term c x^v a pure power of its own variable (x_i^(d_i), distinct i).
  bool is_diagonal() const;

  /// Terms in descending lexicographic order: "x1^6 + 3*x1^4*x2^3 + y...".
  std::string to_string() const;

  friend bool operator==(const FpPolynomial&, const FpPolynomial&) = default;

 private:
  std::int64_t p_;
  std::size_t n_;
  std::map<ExponentVector, std::int64_t> terms_;
};

struct PolyBudget {
  /// Largest number of terms any intermediate result may hold.
  std::size_t max_terms = 5'000'000;
};

FpPolynomial operator+(const FpPolynomial& a, const FpPolynomial& b);
FpPolynomial multiply(const FpPolynomial& a, const FpPolynomial& b, const PolyBudget& budget = {});

/// f^m by repeated squaring.
FpPolynomial poly_pow_squaring(const FpPolynomial& f, std::int64_t m, const PolyBudget& budget = {});

/// f^m as the sum over carry-free u with |u| = m of (m choose u) c^u x^(sum u_i a_i),
/// where f = sum c_i x^(a_i). Multinomials mod p come from Lucas' theorem.
FpPolynomial poly_pow_multinomial(const FpPolynomial& f, std::int64_t m, const PolyBudget& budget = {});

/// f^m; uses the multinomial expansion for diagonal f and squaring otherwise.
FpPolynomial poly_pow(const FpPolynomial& f, std::int64_t m, const PolyBudget& budget = {});

/// x^v -> x^(q v); coefficients are fixed because they lie in F_p.
FpPolynomial bracket(const FpPolynomial& f, std::int64_t q);

struct RootBucket {
  /// The residue mu in [0, q)^n of the bucket.
  ExponentVector residue;
  /// f_mu, with f = sum over buckets of f_mu^q x^mu.
  FpPolynomial root;
};

/// Decomposes f over the basis {x^mu : mu in [0, q)^n}. The roots generate
/// <f>^[1/q]. Buckets are ordered by residue.
std::vector<RootBucket> frob_root_principal(const FpPolynomial& f, std::int64_t q);

struct TestIdeal {
  std::vector<RootBucket> buckets;
  /// Set when every root is a single term.
  std::optional<MonomialIdeal> monomial;
};

/// tau(f^(m/q)) = <f^m>^[1/q], with q a power of p.
TestIdeal test_ideal(const FpPolynomial& f, std::int64_t m, std::int64_t q, const PolyBudget& budget = {});

}  // namespace frobpow
