#pragma once

// Characteristic-zero multiplier ideals of diagonal ideals and of m^d, read
// off from the single inequality cutting out their Newton polyhedra, and the
// comparison with Frobenius powers for p = 1 mod d.

#include <cstdint>
#include <string>
#include <vector>

#include "frobpow/arith.hpp"
#include "frobpow/closedform.hpp"
#include "frobpow/ideal.hpp"

namespace frobpow::multiplier {

/// x^v lies in J(a^t) iff value(v) > t, where value(v) = sum (v_i + 1) / d_i
/// for a = diag(dvec) and (|v| + n) / d for a = m^d.
class NewtonMembership {
 public:
  static NewtonMembership diagonal(const ExponentVector& dvec);
  static NewtonMembership max_ideal_power(std::int64_t d, std::size_t n);

  std::size_t nvars() const { return n_; }
  const std::string& label() const { return label_; }

  Rational value(const ExponentVector& v) const;
  bool member(const ExponentVector& v, const Rational& t) const { return value(v) > t; }

  /// Every v whose membership can change on [0, 1); all others lie in J(a^t)
  /// for every t < 1 and are multiples of some point of the box.
  std::vector<ExponentVector> box() const;

 private:
  NewtonMembership() = default;

  std::size_t n_ = 0;
  std::string label_;
  bool diagonal_ = true;
  ExponentVector dvec_;
  std::int64_t d_ = 1;
};

/// J(a^t) for 0 <= t < 1.
MonomialIdeal multiplier_ideal(const NewtonMembership& nm, const Rational& t);

struct RationalPiece {
  Rational breakpoint;
  MonomialIdeal ideal;
};

/// Piecewise-constant family on [0, 1) with p-independent breakpoints; the
/// unit ideal holds before the first one.
struct RationalFamily {
  std::string label;
  std::size_t nvars = 0;
  std::vector<RationalPiece> pieces;
};

RationalFamily jumping_numbers(const NewtonMembership& nm);

struct Thm64Report {
  std::int64_t p = 0;
  closedform::EvaluatedFamily frobenius;
  RationalFamily multiplier;
  /// One line per disagreement; empty means EQUAL.
  std::vector<std::string> mismatches;
  /// p <= n d - n: the closed forms are applied below their generic bound.
  bool below_generic_bound = false;

  bool equal() const { return mismatches.empty(); }
};

/// Compares the Frobenius powers of diag(dvec) at p = 1 mod d with its
/// multiplier ideals on [0, 1). Requires p prime, p = 1 mod d and p > d.
Thm64Report compare_thm64(const ExponentVector& dvec, std::int64_t p);

}  // namespace frobpow::multiplier
