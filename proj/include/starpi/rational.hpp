#pragma once

#include <gmpxx.h>
#include <string>

namespace starpi {

// Exact rational coefficients. mpq_class keeps gcd(num, den) = 1 and den > 0
// for every arithmetic result; direct constructions must canonicalize.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace starpi
