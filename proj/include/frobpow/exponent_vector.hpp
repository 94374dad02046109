#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

#include "frobpow/errors.hpp"

namespace frobpow {

/// A point of N^n, the exponent vector of the monomial x^u.
///
/// Storage is inline (no heap allocation) because ideal products create
/// millions of these; the variable count is capped at kMaxVars.
class ExponentVector {
 public:
  using value_type = std::int64_t;
  static constexpr std::size_t kMaxVars = 8;

  ExponentVector() = default;

  /// The zero vector in n variables.
  explicit ExponentVector(std::size_t n) : size_(check_size(n)) {}

  ExponentVector(std::initializer_list<value_type> coords) : size_(check_size(coords.size())) {
    std::copy(coords.begin(), coords.end(), coords_.begin());
  }

  explicit ExponentVector(std::span<const value_type> coords) : size_(check_size(coords.size())) {
    std::copy(coords.begin(), coords.end(), coords_.begin());
  }

  static ExponentVector filled(std::size_t n, value_type value) {
    ExponentVector v(n);
    std::fill_n(v.coords_.begin(), n, value);
    return v;
  }

  static ExponentVector unit(std::size_t n, std::size_t i, value_type value = 1) {
    ExponentVector v(n);
    v.coords_[i] = value;
    return v;
  }

  std::size_t size() const { return size_; }
  value_type operator[](std::size_t i) const { return coords_[i]; }
  value_type& operator[](std::size_t i) { return coords_[i]; }

  const value_type* begin() const { return coords_.data(); }
  const value_type* end() const { return coords_.data() + size_; }
  value_type* begin() { return coords_.data(); }
  value_type* end() { return coords_.data() + size_; }

  /// Taxicab norm.
  value_type norm() const {
    value_type s = 0;
    for (std::size_t i = 0; i < size_; ++i) s += coords_[i];
    return s;
  }

  bool is_zero() const {
    return std::all_of(begin(), end(), [](value_type c) { return c == 0; });
  }

  /// Coordinatewise u <= v.
  bool divides(const ExponentVector& v) const {
    for (std::size_t i = 0; i < size_; ++i)
      if (coords_[i] > v.coords_[i]) return false;
    return true;
  }

  /// Coordinatewise u < v.
  bool strictly_below(const ExponentVector& v) const {
    for (std::size_t i = 0; i < size_; ++i)
      if (coords_[i] >= v.coords_[i]) return false;
    return true;
  }

  bool all_positive() const {
    return std::all_of(begin(), end(), [](value_type c) { return c > 0; });
  }

  ExponentVector& operator+=(const ExponentVector& o) {
    for (std::size_t i = 0; i < size_; ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  ExponentVector& operator-=(const ExponentVector& o) {
    for (std::size_t i = 0; i < size_; ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  ExponentVector& operator*=(value_type c) {
    for (std::size_t i = 0; i < size_; ++i) coords_[i] *= c;
    return *this;
  }

  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  friend ExponentVector operator*(value_type c, ExponentVector a) { return a *= c; }

  /// Lexicographic; vectors of different length order by length first.
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }
  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size_; ++i) {
      if (i) s += ",";
      s += std::to_string(coords_[i]);
    }
    return s + ")";
  }

  std::size_t hash() const {
    std::size_t h = size_;
    for (std::size_t i = 0; i < size_; ++i)
      h ^= std::hash<value_type>{}(coords_[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  static std::size_t check_size(std::size_t n) {
    if (n > kMaxVars)
      throw ValidationError("at most " + std::to_string(kMaxVars) + " variables are supported, got " +
                            std::to_string(n));
    return n;
  }

  std::array<value_type, kMaxVars> coords_{};
  std::size_t size_ = 0;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const { return v.hash(); }
};

}  // namespace frobpow
