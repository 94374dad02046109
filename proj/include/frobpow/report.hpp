#pragma once

// Text tables and JSON documents for families and ideals.

#include <json.hpp>
#include <string>

#include "frobpow/closedform.hpp"
#include "frobpow/multiplier.hpp"

namespace frobpow::report {

/// "R" for the unit ideal, "<gens>" otherwise.
std::string ideal_text(const MonomialIdeal& i);

nlohmann::json breakpoint_json(const closedform::SymbolicCrit& c);
nlohmann::json breakpoint_json(const Rational& r);
nlohmann::json generators_json(const MonomialIdeal& i);

/// { "ideal", "class": {"d","rho"}, "pmin", "pieces": [...] }, plus "window"
/// when restricted and "note" when there are no pieces.
nlohmann::json family_json(const closedform::IdealFamily& fam);
/// As family_json with breakpoints as exact fractions and "p" added.
nlohmann::json family_json(const closedform::IdealFamily& fam, const closedform::EvaluatedFamily& at_p);
nlohmann::json family_json(const multiplier::RationalFamily& fam);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const nlohmann::json& doc);

/// One "[lo, hi)  ideal" row per piece, starting with the unit ideal.
std::string family_table(const closedform::IdealFamily& fam);
std::string family_table(const closedform::IdealFamily& fam, const closedform::EvaluatedFamily& at_p);
std::string family_table(const multiplier::RationalFamily& fam);

}  // namespace frobpow::report
