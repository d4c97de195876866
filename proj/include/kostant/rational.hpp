#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer operator== recurses forever under
// C++20 reversed-candidate lookup. Exact non-template overloads win.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, long b) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, long long b) {
  return a == rational<std::int64_t>(static_cast<std::int64_t>(b));
}
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
inline bool operator==(long b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
}  // namespace boost

namespace kostant {

using Integer = std::int64_t;
using Rational = boost::rational<Integer>;

/// Serializes as "p/q" with q >= 1, including integers ("3/1", "0/1").
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Short form used in human-readable output: "3", "-1/2".
inline std::string to_short_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return to_string(r);
}

inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [&](std::string_view s) -> Integer {
    s = trim(s);
    if (s.empty()) throw std::invalid_argument("empty rational component");
    std::size_t used = 0;
    Integer v = std::stoll(std::string(s), &used);
    if (used != s.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

inline std::size_t hash_value(const Rational& r) {
  std::size_t h = std::hash<Integer>{}(r.numerator());
  h ^= std::hash<Integer>{}(r.denominator()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace kostant
