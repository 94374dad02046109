#pragma once

// Monomial ideals of k[x1..xn] and the Frobenius operations on them.

#include <cstdint>
#include <string>
#include <vector>

#include "frobpow/arith.hpp"
#include "frobpow/exponent_vector.hpp"

namespace frobpow {

/// A monomial ideal, stored as its antichain of minimal generators in
/// lexicographic order. Structural equality coincides with ideal equality.
/// No generators is the zero ideal; the single generator 0 is the unit ideal.
class MonomialIdeal {
 public:
  /// Zero ideal in n variables.
  explicit MonomialIdeal(std::size_t n = 0) : n_(n) {}

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n);
  /// Minimalizes and sorts `gens`. Every generator must have n coordinates.
  static MonomialIdeal from_generators(std::size_t n, std::vector<ExponentVector> gens);

  std::size_t nvars() const { return n_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }

  /// x^v in I.
  bool contains(const ExponentVector& v) const;
  /// other is a subset of *this.
  bool contains(const MonomialIdeal& other) const;

  /// Generators in descending lexicographic order, "x1^2*x2, x2^3"; "1" for
  /// the unit ideal and "0" for the zero ideal.
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExponentVector> gens_;
};

/// The antichain of <=-minimal elements, sorted lexicographically.
std::vector<ExponentVector> minimal_elements(std::vector<ExponentVector> gens);

inline MonomialIdeal minimalize(std::size_t n, std::vector<ExponentVector> gens) {
  return MonomialIdeal::from_generators(n, std::move(gens));
}

/// Upward-closed set used to discard candidate generators during products:
/// a candidate g is dropped when scale * g lies in `ideal`. Because the set is
/// upward closed, anything built from a dropped candidate would also be in it,
/// so products restricted this way decide non-containment exactly.
struct Absorber {
  const MonomialIdeal* ideal = nullptr;
  std::int64_t scale = 1;

  bool absorbs(const ExponentVector& g) const {
    if (!ideal) return false;
    return scale == 1 ? ideal->contains(g) : ideal->contains(scale * g);
  }
  Absorber scaled(std::int64_t factor) const { return Absorber{ideal, scale * factor}; }
};

MonomialIdeal sum(const MonomialIdeal& i, const MonomialIdeal& j);
MonomialIdeal product(const MonomialIdeal& i, const MonomialIdeal& j, const Absorber& absorb = {});
MonomialIdeal power(const MonomialIdeal& i, std::int64_t m, const Absorber& absorb = {});
MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j);

/// Standard Frobenius power I^[q]: generators scaled by q.
MonomialIdeal bracket_power(const MonomialIdeal& i, std::int64_t q);
/// Frobenius root I^[1/q]: the smallest J with I in J^[q].
MonomialIdeal bracket_root(const MonomialIdeal& i, std::int64_t q);

/// Generalized integral Frobenius power: with m = m0 + m1 p + ... + mr p^r,
/// I^[m] = I^m0 (I^m1)^[p] ... (I^mr)^[p^r]. With an absorber, generators in
/// the absorbing set are dropped after every partial product.
MonomialIdeal frob_power_int(const MonomialIdeal& i, std::int64_t m, std::int64_t p,
                             const Absorber& absorb = {});

/// The same ideal built independently as <h^s : |s| = m, (m choose s) != 0 mod p>
/// over the generators h of I. Throws ResourceError when the number of
/// candidate exponent tuples s exceeds `cap`.
MonomialIdeal frob_power_gens(const MonomialIdeal& i, std::int64_t m, std::int64_t p,
                              std::int64_t cap = 2'000'000);

/// I^[m/q] = (I^[m])^[1/q].
MonomialIdeal frob_power_rational(const MonomialIdeal& i, std::int64_t m, std::int64_t q,
                                  std::int64_t p);

/// <x1^u1, ..., xn^un>, u > 0.
MonomialIdeal diag(const ExponentVector& u);
/// m^d in n variables.
MonomialIdeal power_of_m(std::int64_t d, std::size_t n);

/// The grading deg(x_i) = d / d_i attached to a diagonal ideal diag(dvec),
/// with d = lcm(dvec).
class GradedWeights {
 public:
  explicit GradedWeights(const ExponentVector& dvec);

  const ExponentVector& dvec() const { return dvec_; }
  const ExponentVector& weights() const { return weights_; }
  std::int64_t lcm() const { return d_; }
  std::size_t nvars() const { return dvec_.size(); }

  std::int64_t deg(const ExponentVector& u) const;
  /// u-bar: coordinates w_i u_i, so that |u-bar| = deg(u).
  ExponentVector bar(const ExponentVector& u) const;
  bool balanced() const;

 private:
  ExponentVector dvec_;
  ExponentVector weights_;
  std::int64_t d_ = 1;
};

/// R_{>m} = <x^v : deg(v) > m>.
MonomialIdeal R_gt(std::int64_t m, const GradedWeights& w);

/// Weak compositions: all v in N^n with |v| = k, lexicographic.
std::vector<ExponentVector> weak_compositions(std::int64_t k, std::size_t n);

}  // namespace frobpow
