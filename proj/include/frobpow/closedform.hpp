#pragma once

// Closed forms for the critical exponents and Frobenius-power families of
// m^d and of diagonal ideals diag(dvec). Everything here is symbolic in the
// characteristic p: results depend only on the residue class of p modulo d,
// and a separate, validated step evaluates them at a concrete prime.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "frobpow/arith.hpp"
#include "frobpow/ideal.hpp"

namespace frobpow::closedform {

/// The base-p truncation k/d - r/(d p^s). When s is infinite, r = 0 and the
/// value is k/d.
///
/// Within one family all crits share d, and for admissible p (r < p) the
/// value lies in ((k-1)/d, k/d]; that makes (k asc, s asc, r desc) a total
/// order agreeing with numeric order at every admissible prime.
class SymbolicCrit {
 public:
  SymbolicCrit(std::int64_t k, std::int64_t d, ExtNat s, std::int64_t r);

  /// The value 1 = d/d. Also used by crit_diag as the answer for points whose
  /// critical exponent is not below 1.
  static SymbolicCrit one(std::int64_t d) { return SymbolicCrit(d, d, ExtNat::infinity(), 0); }

  std::int64_t k() const { return k_; }
  std::int64_t d() const { return d_; }
  const ExtNat& s() const { return s_; }
  std::int64_t r() const { return r_; }

  bool is_one() const { return s_.is_infinite() && k_ == d_; }

  /// Exact value at a concrete prime.
  Rational eval(std::int64_t p) const;

  /// k, d and r divided by their common gcd (value-preserving).
  SymbolicCrit reduced() const;

  /// Human form with common factors removed: "3/7", "5/7 - 2/(7p)",
  /// "4/7 - 2/(7p^2)", "1 - 1/p", "2/3 - 1/(3p)".
  std::string to_string() const;

  /// Symbolic order; both sides must share d.
  friend std::strong_ordering operator<=>(const SymbolicCrit& a, const SymbolicCrit& b);
  friend bool operator==(const SymbolicCrit&, const SymbolicCrit&) = default;

 private:
  std::int64_t k_;
  std::int64_t d_;
  ExtNat s_;
  std::int64_t r_;
};

/// Open interval (lo, hi) for restricting families. Endpoints must be decidable
/// against every crit symbolically, which holds for multiples of 1/d.
struct CritWindow {
  Rational lo;
  Rational hi;

  bool contains(const SymbolicCrit& c) const;
};

struct FamilyPiece {
  SymbolicCrit breakpoint;
  MonomialIdeal ideal;
};

/// Right-continuous, piecewise-constant t -> ideal on [0, 1). The unit ideal
/// holds on [0, first breakpoint); piece i holds on [breakpoint_i, breakpoint_{i+1}).
struct IdealFamily {
  std::string label;
  std::size_t nvars = 0;
  ResidueClass rc;
  /// Smallest admissible characteristic.
  std::int64_t pmin = 2;
  std::vector<FamilyPiece> pieces;
  /// Set when the family was restricted to a window; the pieces then cover only it.
  std::optional<CritWindow> window;
};

struct EvaluatedPiece {
  Rational breakpoint;
  MonomialIdeal ideal;
};

/// A family evaluated at a concrete admissible prime.
struct EvaluatedFamily {
  std::string label;
  std::size_t nvars = 0;
  std::int64_t p = 0;
  std::vector<EvaluatedPiece> pieces;
};

/// All u > 0 with |u| = k, in lexicographic order.
std::vector<ExponentVector> compositions(std::int64_t k, std::size_t n);

/// crit(m^d, u) for any u in comp(k, n), n <= k <= d.
SymbolicCrit crit_md(std::int64_t k, std::int64_t d, std::size_t n, const ResidueClass& rc);

/// Frobenius powers of m^d on [0, 1) for p > d in the class rc.
IdealFamily family_md(std::int64_t d, std::size_t n, const ResidueClass& rc);

/// Memoized crit(diag(dvec), u) for one residue class.
class DiagonalCrits {
 public:
  DiagonalCrits(const ExponentVector& dvec, const ResidueClass& rc);

  const GradedWeights& weights() const { return weights_; }
  const ResidueClass& residue_class() const { return rc_; }
  std::int64_t lcm() const { return weights_.lcm(); }
  std::size_t nvars() const { return weights_.nvars(); }

  /// crit(diag(dvec), u). Returns SymbolicCrit::one when u is not <= dvec or
  /// deg(u) > d: the critical exponent is then not below 1.
  SymbolicCrit crit(const ExponentVector& u);

  /// Frobenius power at crit(u) < 1: R_{>deg(u - 1)} + <x^v : deg(v + 1) = deg(u),
  /// crit(v + 1) > crit(u)>.
  MonomialIdeal frobenius_power_at(const ExponentVector& u);

  /// Admissible primes: p > n d - n and p in the class (so p does not divide d).
  std::int64_t pmin() const;

 private:
  SymbolicCrit compute(const ExponentVector& u) const;

  GradedWeights weights_;
  ResidueClass rc_;
  std::vector<std::int64_t> rho_powers_;  // rho^e mod d for e = 1..ord
  std::unordered_map<ExponentVector, SymbolicCrit, ExponentVectorHash> cache_;
};

SymbolicCrit crit_diag(const ExponentVector& u, const ExponentVector& dvec, const ResidueClass& rc);

MonomialIdeal frobpow_diag_at_crit(const ExponentVector& u, const ExponentVector& dvec, const ResidueClass& rc);

/// The distinct critical exponents of diag(dvec) in (0, 1), ascending, each
/// with the lexicographically first point u realizing it.
std::vector<std::pair<SymbolicCrit, ExponentVector>> crits_diag(const ExponentVector& dvec, const ResidueClass& rc,
                                                                unsigned threads = 1);

/// Frobenius powers of diag(dvec) on [0, 1), optionally restricted to a window.
/// Throws InternalError if the computed ideals fail to strictly decrease.
IdealFamily family_diag(const ExponentVector& dvec, const ResidueClass& rc,
                        const std::optional<CritWindow>& window = std::nullopt, unsigned threads = 1);

/// Breakpoints evaluated at p. Throws ValidationError when p is composite,
/// outside the class, or below pmin.
EvaluatedFamily eval_at_prime(const IdealFamily& fam, std::int64_t p);
Rational eval_at_prime(const SymbolicCrit& crit, const ResidueClass& rc, std::int64_t pmin, std::int64_t p);

/// The ideal of an evaluated family at t in [0, 1). For t >= 1 `skoda` must be
/// set: the value is then base * (family at t - 1), applied recursively, which
/// relies on Skoda's theorem for Frobenius powers.
MonomialIdeal ideal_at(const EvaluatedFamily& fam, const Rational& t, const MonomialIdeal& base, bool skoda);

/// mu(m^d, u, p^e) for u in comp(k, n), n <= k <= d, read off from the
/// regular-powers formula and the finite-s recursion mu(q p^e) = (mu(q) + 1) p^e - 1.
std::int64_t mu_md(std::int64_t k, std::int64_t d, std::size_t n, std::int64_t p, std::int64_t e);

/// nu(m^d, u, q) = floor((k q - n) / d) for u in comp(k, n), n <= k <= d.
std::int64_t nu_md(std::int64_t k, std::int64_t d, std::size_t n, std::int64_t q);

/// mu(diag(dvec), u, p^e) for 0 < u <= dvec and admissible p.
std::int64_t mu_diag(const ExponentVector& u, const ExponentVector& dvec, std::int64_t p, std::int64_t e);

}  // namespace frobpow::closedform
