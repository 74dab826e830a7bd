#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fractiso {

/// Exact fraction backed by GMP. Arithmetic results and parse_rational are
/// canonical (gcd(|num|, den) = 1, den > 0); the two-argument constructor is
/// not, so call canonicalize() after it unless p/q is already reduced.
using Rational = mpq_class;

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  }
  return acc;
}

}  // namespace fractiso
