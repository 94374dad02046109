#pragma once

// Text syntax for ideals, polynomials and points.
//
//   ideal:  "x1^6, x2^4" | "x1^2*x2, x2^3" | "m^7(3)" | "diag(6,4)" | "1"
//   poly:   "x1^3 + 2*x2^4 - x3^5"   (integer coefficients, reduced mod p)
//   point:  "(1,2,3)" or "1,2,3"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "frobpow/fppoly.hpp"
#include "frobpow/ideal.hpp"

namespace frobpow {

struct ParsedIdeal {
  MonomialIdeal ideal;
  /// Canonical spelling: "m^7(3)", "diag(6,4)" or the generator list.
  std::string label;
  /// Set when the ideal is diag(dvec), however it was written.
  std::optional<ExponentVector> dvec;
  /// Set for m^d(n): (d, n).
  std::optional<std::pair<std::int64_t, std::size_t>> max_ideal_power;
};

/// `nvars` pads the ring when the text names fewer variables (0 = infer).
ParsedIdeal parse_ideal(const std::string& text, std::size_t nvars = 0);

FpPolynomial parse_polynomial(const std::string& text, std::int64_t p, std::size_t nvars = 0);

ExponentVector parse_point(const std::string& text);

}  // namespace frobpow
