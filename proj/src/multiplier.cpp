#include "frobpow/multiplier.hpp"

#include <algorithm>
#include <set>

#include "frobpow/errors.hpp"

namespace frobpow::multiplier {

NewtonMembership NewtonMembership::diagonal(const ExponentVector& dvec) {
  if (dvec.size() == 0 || !dvec.all_positive())
    throw ValidationError("diagonal exponents must be positive, got " + dvec.to_string());
  NewtonMembership nm;
  nm.n_ = dvec.size();
  nm.label_ = "diag" + dvec.to_string();
  nm.diagonal_ = true;
  nm.dvec_ = dvec;
  nm.d_ = lcm_of(dvec);
  return nm;
}

NewtonMembership NewtonMembership::max_ideal_power(std::int64_t d, std::size_t n) {
  if (d < 1 || n == 0) throw ValidationError("m^d needs d >= 1 and n >= 1");
  NewtonMembership nm;
  nm.n_ = n;
  nm.label_ = "m^" + std::to_string(d) + "(" + std::to_string(n) + ")";
  nm.diagonal_ = false;
  nm.d_ = d;
  return nm;
}

Rational NewtonMembership::value(const ExponentVector& v) const {
  if (v.size() != n_) throw ValidationError("point " + v.to_string() + " has the wrong number of coordinates");
  if (!diagonal_) return make_rational(v.norm() + static_cast<std::int64_t>(n_), d_);
  // sum (v_i + 1) / d_i = sum (v_i + 1) w_i / d.
  std::int64_t num = 0;
  for (std::size_t i = 0; i < n_; ++i) num += (v[i] + 1) * (d_ / dvec_[i]);
  return make_rational(num, d_);
}

std::vector<ExponentVector> NewtonMembership::box() const {
  if (!diagonal_) {
    std::vector<ExponentVector> out;
    for (std::int64_t k = 0; k <= d_; ++k)
      for (auto& v : weak_compositions(k, n_)) out.push_back(v);
    return out;
  }
  std::vector<ExponentVector> out;
  ExponentVector v(n_);
  while (true) {
    out.push_back(v);
    std::size_t i = n_;
    while (i > 0) {
      --i;
      if (v[i] + 1 < dvec_[i]) {
        ++v[i];
        break;
      }
      v[i] = 0;
      if (i == 0) return out;
    }
  }
}

MonomialIdeal multiplier_ideal(const NewtonMembership& nm, const Rational& t) {
  if (t < 0 || t >= 1) throw ValidationError("multiplier_ideal needs 0 <= t < 1, got " + to_string(t));
  std::vector<ExponentVector> gens;
  for (const auto& v : nm.box())
    if (nm.member(v, t)) gens.push_back(v);
  return MonomialIdeal::from_generators(nm.nvars(), std::move(gens));
}

RationalFamily jumping_numbers(const NewtonMembership& nm) {
  std::set<Rational> candidates;
  for (const auto& v : nm.box()) {
    auto x = nm.value(v);
    if (x < 1) candidates.insert(x);
  }
  RationalFamily fam;
  fam.label = nm.label();
  fam.nvars = nm.nvars();
  auto previous = MonomialIdeal::unit(nm.nvars());
  for (const auto& t : candidates) {
    auto ideal = multiplier_ideal(nm, t);
    if (ideal == previous) continue;
    fam.pieces.push_back({t, ideal});
    previous = std::move(ideal);
  }
  return fam;
}

Thm64Report compare_thm64(const ExponentVector& dvec, std::int64_t p) {
  const GradedWeights w(dvec);
  const std::int64_t d = w.lcm();
  const auto n = static_cast<std::int64_t>(dvec.size());
  require_prime(p);
  if (lpr(p, d) != 1) throw ValidationError("p = " + std::to_string(p) + " is not 1 mod " + std::to_string(d));
  if (p <= d) throw ValidationError("p = " + std::to_string(p) + " must exceed d = " + std::to_string(d));

  Thm64Report report;
  report.p = p;
  report.below_generic_bound = p <= n * d - n;
  const auto fam = closedform::family_diag(dvec, ResidueClass::make(1, d));
  report.frobenius.label = fam.label;
  report.frobenius.nvars = fam.nvars;
  report.frobenius.p = p;
  for (const auto& piece : fam.pieces) report.frobenius.pieces.push_back({piece.breakpoint.eval(p), piece.ideal});
  report.multiplier = jumping_numbers(NewtonMembership::diagonal(dvec));

  const auto& a = report.frobenius.pieces;
  const auto& b = report.multiplier.pieces;
  if (a.size() != b.size())
    report.mismatches.push_back("piece counts differ: " + std::to_string(a.size()) + " Frobenius vs " +
                                std::to_string(b.size()) + " multiplier");
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i].breakpoint != b[i].breakpoint)
      report.mismatches.push_back("piece " + std::to_string(i + 1) + ": breakpoint " + to_string(a[i].breakpoint) +
                                  " vs " + to_string(b[i].breakpoint));
    if (a[i].ideal != b[i].ideal)
      report.mismatches.push_back("piece " + std::to_string(i + 1) + ": ideal <" + a[i].ideal.to_string() + "> vs <" +
                                  b[i].ideal.to_string() + ">");
  }
  return report;
}

}  // namespace frobpow::multiplier
