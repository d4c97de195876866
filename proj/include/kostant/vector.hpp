#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kostant/rational.hpp"

namespace kostant {

/// Exact coordinate vector in a weight space. Equality is coordinatewise;
/// ordering is lexicographic, which fixes every canonical ordering in the library.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : coords_(dim, Rational(0)) {}
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  static RationalVector from_integers(std::initializer_list<Integer> values) {
    RationalVector v;
    v.coords_.reserve(values.size());
    for (auto x : values) v.coords_.emplace_back(x);
    return v;
  }

  static RationalVector unit(std::size_t dim, std::size_t index) {
    RationalVector v(dim);
    v.coords_.at(index) = 1;
    return v;
  }

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r == 0; });
  }

  RationalVector& operator+=(const RationalVector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  RationalVector& operator-=(const RationalVector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  RationalVector& operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const Rational& s, RationalVector a) { return a *= s; }
  friend RationalVector operator*(RationalVector a, const Rational& s) { return a *= s; }
  friend RationalVector operator-(RationalVector a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }

  friend bool operator==(const RationalVector& a, const RationalVector& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
      if (b.coords_[i] < a.coords_[i]) return std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
  }

  /// Pairing with a functional written in the same coordinates.
  Rational dot(const RationalVector& o) const {
    check_dim(o);
    Rational s(0);
    for (std::size_t i = 0; i < coords_.size(); ++i) s += coords_[i] * o.coords_[i];
    return s;
  }

  /// "(1/2,-1/2,0/1)" with every entry in p/q form.
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += kostant::to_string(coords_[i]);
    }
    return s + ")";
  }

  std::string to_short_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += kostant::to_short_string(coords_[i]);
    }
    return s + ")";
  }

 private:
  void check_dim(const RationalVector& o) const {
    if (o.size() != coords_.size()) throw std::invalid_argument("dimension mismatch between vectors");
  }

  std::vector<Rational> coords_;
};

struct RationalVectorHash {
  std::size_t operator()(const RationalVector& v) const {
    std::size_t h = v.size();
    for (const auto& c : v) h ^= hash_value(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Parses "(a,b,c)" or "a b c" or "a,b,c"; entries are integers or p/q.
inline RationalVector parse_vector(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '(' || c == ')' || c == '[' || c == ']') continue;
    cleaned += (c == ',' ? ' ' : c);
  }
  std::vector<Rational> coords;
  std::size_t pos = 0;
  while (pos < cleaned.size()) {
    while (pos < cleaned.size() && cleaned[pos] == ' ') ++pos;
    if (pos >= cleaned.size()) break;
    std::size_t end = cleaned.find(' ', pos);
    if (end == std::string::npos) end = cleaned.size();
    coords.push_back(parse_rational(std::string_view(cleaned).substr(pos, end - pos)));
    pos = end;
  }
  if (coords.empty()) throw std::invalid_argument("empty vector '" + std::string(text) + "'");
  return RationalVector(std::move(coords));
}

}  // namespace kostant
