#pragma once

#include <gmpxx.h>

#include <string>

namespace dercalc {

// Exact rational scalar. GMP keeps denominators positive and fractions in
// lowest terms, which is the invariant everything downstream assumes.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "n" or "n/d"; throws std::invalid_argument on garbage or d == 0.
Rational rat_parse(const std::string& text);

// "n" when the denominator is 1, otherwise "n/d".
std::string rat_str(const Rational& q);

}  // namespace dercalc
