#pragma once

// Definitional (brute-force) computation of the integer invariants mu and nu,
// and of the truncations mu(a, b, p^e) / p^e that approximate crit(a, b).
// These are the ground truth the closed forms are tested against.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "frobpow/arith.hpp"
#include "frobpow/ideal.hpp"

namespace frobpow::oracle {

struct OracleConfig {
  /// Largest m the ascending mu/nu searches may try; 0 selects the default
  /// q * (nu(a, b, 1) + 2).
  std::int64_t search_cap = 0;
};

/// (a, b, q, p) with a nonzero and proper, b proper, a inside the radical of b,
/// q a power of the prime p.
class InvariantQuery {
 public:
  /// Validates every precondition; throws ValidationError naming the first
  /// one that fails.
  InvariantQuery(MonomialIdeal a, MonomialIdeal b, std::int64_t q, std::int64_t p);

  const MonomialIdeal& a() const { return a_; }
  const MonomialIdeal& b() const { return b_; }
  std::int64_t q() const { return q_; }
  std::int64_t p() const { return p_; }

  InvariantQuery with_q(std::int64_t q) const { return InvariantQuery(a_, b_, q, p_); }

 private:
  MonomialIdeal a_;
  MonomialIdeal b_;
  std::int64_t q_;
  std::int64_t p_;
};

/// Smallest N with x^(N g) in b for every generator g of a, or nullopt when
/// some generator has no power in b (a is not inside the radical of b).
std::optional<std::int64_t> radical_exponent(const MonomialIdeal& a, const MonomialIdeal& b);

/// Answers "is a^[m] outside J?" for a fixed (a, J, p), caching the absorbed
/// digit factors (a^c)^[p^j] across calls.
class FrobeniusEscape {
 public:
  FrobeniusEscape(MonomialIdeal a, MonomialIdeal target, std::int64_t p);

  /// True iff a^[m] is not contained in the target ideal.
  bool escapes(std::int64_t m);

 private:
  const MonomialIdeal& factor(std::size_t position, std::int64_t digit);

  MonomialIdeal a_;
  MonomialIdeal target_;
  std::int64_t p_;
  std::map<std::pair<std::size_t, std::int64_t>, MonomialIdeal> factors_;
};

/// max { m : a^[m] not inside b^[q] }.
std::int64_t mu(const InvariantQuery& query, const OracleConfig& cfg = {});

/// max { m : a^m not inside b^[q] }.
std::int64_t nu(const InvariantQuery& query, const OracleConfig& cfg = {});

/// mu(a, b, p^e) / p^e for e = 1..max_e.
std::vector<Rational> crit_truncations(const MonomialIdeal& a, const MonomialIdeal& b, std::int64_t p,
                                       std::int64_t max_e, const OracleConfig& cfg = {});

/// mu(diag(d*1), diag(u), q) computed as the largest |s| over carry-free s
/// bounded by (q u - <q u>_d) / d, via a base-p digit dynamic program.
std::int64_t mu_diag_fast(const ExponentVector& u, std::int64_t q, std::int64_t d, std::int64_t p);

/// The coordinatewise cap (q u - <q u>_d) / d used by mu_diag_fast.
ExponentVector diag_mu_cap(const ExponentVector& u, std::int64_t q, std::int64_t d);

}  // namespace frobpow::oracle
