#pragma once

#include <string>
#include <vector>

#include "frobpow/ideal.hpp"
#include "frobpow/parse.hpp"

namespace frobpow::testing {

inline MonomialIdeal I(const std::string& text, std::size_t nvars = 0) { return parse_ideal(text, nvars).ideal; }

inline MonomialIdeal gens(std::size_t n, std::vector<ExponentVector> g) {
  return MonomialIdeal::from_generators(n, std::move(g));
}

// Brute-force membership of every monomial in [0, bound)^n.
inline bool same_in_box(const MonomialIdeal& a, const MonomialIdeal& b, std::int64_t bound) {
  const auto n = a.nvars();
  ExponentVector v(n);
  while (true) {
    if (a.contains(v) != b.contains(v)) return false;
    std::size_t i = 0;
    while (i < n && ++v[i] == bound) v[i++] = 0;
    if (i == n) return true;
  }
}

}  // namespace frobpow::testing
