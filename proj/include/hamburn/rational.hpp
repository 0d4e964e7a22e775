#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hamburn {

// The only number type the algorithms see. Every comparison in this library is
// exact; canonical form (den > 0, gcd(|num|, den) = 1) holds after every
// operation because mpq arithmetic preserves it.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "num/den" with den >= 1, e.g. "-1/3", "0/1", "5/1".
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p/q" and bare integers; rejects zero denominators.
inline Rational parse_rational(const std::string& s) {
  Rational r;
  try {
    r = Rational(s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace hamburn
