#pragma once

#include <gmpxx.h>
#include <string>

namespace imh {

// Exact rational coefficient. mpq_class keeps values canonical:
// positive denominator, gcd(num, den) = 1, zero stored as 0/1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace imh
