#include "frobpow/parse.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "frobpow/errors.hpp"

namespace frobpow {

namespace {

class Cursor {
 public:
  Cursor(const std::string& text, std::string what) : text_(text), what_(std::move(what)) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  std::int64_t integer() {
    if (!at_digit()) fail("expected a number");
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_++] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - digit) / 10) fail("number too large");
      v = v * 10 + digit;
    }
    return v;
  }
  bool accept_word(const std::string& w) {
    skip_space();
    if (text_.compare(pos_, w.size(), w) != 0) return false;
    pos_ += w.size();
    return true;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("cannot parse " + what_ + " \"" + text_ + "\" at position " + std::to_string(pos_) + ": " + why);
  }

 private:
  const std::string& text_;
  std::string what_;
  std::size_t pos_ = 0;
};

// Sparse monomial as (variable index from 0, exponent) pairs.
using Factors = std::vector<std::pair<std::size_t, std::int64_t>>;

// x3^2 or x3.
std::pair<std::size_t, std::int64_t> variable_power(Cursor& c) {
  c.expect('x');
  const auto idx = c.integer();
  if (idx < 1 || idx > static_cast<std::int64_t>(ExponentVector::kMaxVars))
    c.fail("variable index must be in 1.." + std::to_string(ExponentVector::kMaxVars));
  std::int64_t e = 1;
  if (c.accept('^')) e = c.integer();
  return {static_cast<std::size_t>(idx - 1), e};
}

ExponentVector to_vector(const Factors& f, std::size_t n) {
  ExponentVector v(n);
  for (auto [i, e] : f) v[i] += e;
  return v;
}

std::vector<std::int64_t> integer_list(Cursor& c) {
  std::vector<std::int64_t> out;
  c.expect('(');
  do out.push_back(c.integer());
  while (c.accept(','));
  c.expect(')');
  return out;
}

std::optional<ExponentVector> diagonal_shape(const MonomialIdeal& i) {
  const std::size_t n = i.nvars();
  if (n == 0 || i.generators().size() != n) return std::nullopt;
  ExponentVector dvec(n);
  for (const auto& g : i.generators()) {
    std::size_t support = 0, var = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (g[k] != 0) {
        ++support;
        var = k;
      }
    if (support != 1 || dvec[var] != 0) return std::nullopt;
    dvec[var] = g[var];
  }
  return dvec;
}

}  // namespace

ParsedIdeal parse_ideal(const std::string& text, std::size_t nvars) {
  Cursor c(text, "ideal");
  ParsedIdeal out;
  if (c.accept_word("diag")) {
    const auto list = integer_list(c);
    if (!c.done()) c.fail("trailing input");
    if (list.size() > ExponentVector::kMaxVars) c.fail("too many variables");
    ExponentVector dvec(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) dvec[i] = list[i];
    if (!dvec.all_positive()) c.fail("diagonal exponents must be positive");
    out.ideal = diag(dvec);
    out.dvec = dvec;
    out.label = "diag" + dvec.to_string();
    return out;
  }
  if (c.accept_word("m")) {
    std::int64_t d = 1;
    if (c.accept('^')) d = c.integer();
    const auto list = integer_list(c);
    if (list.size() != 1) c.fail("expected m^d(n)");
    if (!c.done()) c.fail("trailing input");
    if (d < 1) c.fail("d must be positive");
    if (list[0] < 1 || list[0] > static_cast<std::int64_t>(ExponentVector::kMaxVars)) c.fail("bad variable count");
    const auto n = static_cast<std::size_t>(list[0]);
    out.ideal = power_of_m(d, n);
    out.max_ideal_power = std::make_pair(d, n);
    out.label = "m^" + std::to_string(d) + "(" + std::to_string(n) + ")";
    if (n == 1) out.dvec = ExponentVector{d};
    return out;
  }

  std::vector<Factors> gens;
  std::size_t n = nvars;
  do {
    Factors f;
    if (c.at_digit()) {
      if (c.integer() != 1) c.fail("only the constant 1 may appear as a generator");
    } else {
      do {
        auto vp = variable_power(c);
        n = std::max(n, vp.first + 1);
        f.push_back(vp);
      } while (c.accept('*'));
    }
    gens.push_back(std::move(f));
  } while (c.accept(','));
  if (!c.done()) c.fail("trailing input");
  if (n == 0) c.fail("cannot infer the number of variables; name them or pass a variable count");
  std::vector<ExponentVector> vecs;
  for (const auto& f : gens) vecs.push_back(to_vector(f, n));
  out.ideal = MonomialIdeal::from_generators(n, std::move(vecs));
  out.dvec = diagonal_shape(out.ideal);
  out.label = out.ideal.to_string();
  return out;
}

FpPolynomial parse_polynomial(const std::string& text, std::int64_t p, std::size_t nvars) {
  Cursor c(text, "polynomial");
  struct Term {
    std::int64_t coeff;
    Factors factors;
  };
  std::vector<Term> terms;
  std::size_t n = nvars;
  bool first = true;
  while (!c.done()) {
    std::int64_t sign = 1;
    if (c.accept('-'))
      sign = -1;
    else if (!c.accept('+') && !first)
      c.fail("expected '+' or '-'");
    first = false;
    Term t{sign, {}};
    bool need_factor = true;
    if (c.at_digit()) {
      t.coeff = sign * (c.integer() % p);
      need_factor = c.accept('*');
    }
    if (need_factor) {
      do {
        auto vp = variable_power(c);
        n = std::max(n, vp.first + 1);
        t.factors.push_back(vp);
      } while (c.accept('*'));
    }
    terms.push_back(std::move(t));
  }
  if (terms.empty()) c.fail("empty polynomial");
  if (n == 0) n = 1;
  FpPolynomial f(p, n);
  for (const auto& t : terms) f.add_term(to_vector(t.factors, n), t.coeff);
  return f;
}

ExponentVector parse_point(const std::string& text) {
  Cursor c(text, "point");
  const bool paren = c.accept('(');
  std::vector<std::int64_t> coords;
  do coords.push_back(c.integer());
  while (c.accept(','));
  if (paren) c.expect(')');
  if (!c.done()) c.fail("trailing input");
  if (coords.size() > ExponentVector::kMaxVars) c.fail("too many coordinates");
  ExponentVector v(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) v[i] = coords[i];
  return v;
}

}  // namespace frobpow
