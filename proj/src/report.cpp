#include "frobpow/report.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace frobpow::report {

using nlohmann::json;

namespace {

json class_json(const ResidueClass& rc) { return json{{"d", rc.d}, {"rho", rc.rho}}; }

// Rows of (interval, ideal) with left column padded to a common width.
std::string table(const std::string& header, const std::vector<std::string>& bounds,
                  const std::vector<std::string>& ideals, const std::string& top) {
  std::vector<std::string> left;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const std::string hi = i + 1 < bounds.size() ? bounds[i + 1] : top;
    left.push_back("[" + bounds[i] + ", " + hi + ")");
  }
  std::size_t width = 0;
  for (const auto& l : left) width = std::max(width, l.size());
  std::ostringstream out;
  out << header << "\n";
  for (std::size_t i = 0; i < left.size(); ++i)
    out << "  " << left[i] << std::string(width - left[i].size() + 2, ' ') << ideals[i] << "\n";
  return out.str();
}

std::string header(const closedform::IdealFamily& fam) {
  std::string h = fam.label + "  class " + fam.rc.to_string() + "  pmin " + std::to_string(fam.pmin);
  if (fam.window) h += "  window (" + to_string(fam.window->lo) + ", " + to_string(fam.window->hi) + ")";
  return h;
}

json base_json(const closedform::IdealFamily& fam) {
  json doc;
  doc["ideal"] = fam.label;
  doc["class"] = class_json(fam.rc);
  doc["pmin"] = fam.pmin;
  if (fam.window) doc["window"] = json{{"lo", to_string(fam.window->lo)}, {"hi", to_string(fam.window->hi)}};
  if (fam.pieces.empty()) doc["note"] = "no critical exponents in the requested range; the unit ideal holds throughout";
  return doc;
}

}  // namespace

std::string ideal_text(const MonomialIdeal& i) { return i.is_unit() ? "R" : "<" + i.to_string() + ">"; }

json breakpoint_json(const closedform::SymbolicCrit& c) {
  json s = c.s().is_infinite() ? json("inf") : json(c.s().value());
  return json{{"k", c.k()}, {"d", c.d()}, {"s", s}, {"r", c.r()}};
}

json breakpoint_json(const Rational& r) {
  return json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

json generators_json(const MonomialIdeal& i) {
  json gens = json::array();
  for (const auto& g : i.generators()) gens.push_back(std::vector<std::int64_t>(g.begin(), g.end()));
  return gens;
}

json family_json(const closedform::IdealFamily& fam) {
  json doc = base_json(fam);
  json pieces = json::array();
  for (const auto& p : fam.pieces)
    pieces.push_back(json{{"breakpoint", breakpoint_json(p.breakpoint)}, {"generators", generators_json(p.ideal)}});
  doc["pieces"] = pieces;
  return doc;
}

json family_json(const closedform::IdealFamily& fam, const closedform::EvaluatedFamily& at_p) {
  json doc = base_json(fam);
  doc["p"] = at_p.p;
  json pieces = json::array();
  for (const auto& p : at_p.pieces)
    pieces.push_back(json{{"breakpoint", breakpoint_json(p.breakpoint)}, {"generators", generators_json(p.ideal)}});
  doc["pieces"] = pieces;
  return doc;
}

json family_json(const multiplier::RationalFamily& fam) {
  json doc;
  doc["ideal"] = fam.label;
  json pieces = json::array();
  for (const auto& p : fam.pieces)
    pieces.push_back(json{{"breakpoint", breakpoint_json(p.breakpoint)}, {"generators", generators_json(p.ideal)}});
  doc["pieces"] = pieces;
  if (fam.pieces.empty()) doc["note"] = "no jumping numbers in [0, 1); the unit ideal holds throughout";
  return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string family_table(const closedform::IdealFamily& fam) {
  std::vector<std::string> bounds, ideals;
  if (!fam.window) {
    bounds.push_back("0");
    ideals.push_back("R");
  }
  for (const auto& p : fam.pieces) {
    bounds.push_back(p.breakpoint.to_string());
    ideals.push_back(ideal_text(p.ideal));
  }
  return table(header(fam), bounds, ideals, fam.window ? to_string(fam.window->hi) : "1");
}

std::string family_table(const closedform::IdealFamily& fam, const closedform::EvaluatedFamily& at_p) {
  std::vector<std::string> bounds, ideals;
  if (!fam.window) {
    bounds.push_back("0");
    ideals.push_back("R");
  }
  for (const auto& p : at_p.pieces) {
    bounds.push_back(to_string(p.breakpoint));
    ideals.push_back(ideal_text(p.ideal));
  }
  return table(header(fam) + "  at p = " + std::to_string(at_p.p), bounds, ideals,
               fam.window ? to_string(fam.window->hi) : "1");
}

std::string family_table(const multiplier::RationalFamily& fam) {
  std::vector<std::string> bounds{"0"}, ideals{"R"};
  for (const auto& p : fam.pieces) {
    bounds.push_back(to_string(p.breakpoint));
    ideals.push_back(ideal_text(p.ideal));
  }
  return table(fam.label + "  multiplier ideals", bounds, ideals, "1");
}

}  // namespace frobpow::report
