#pragma once
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace fy {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator as long as every entry point canonicalizes.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with arbitrary-precision decimal integers.
Rational rational_from_string(const std::string& s);

std::string rational_num_string(const Rational& r);
std::string rational_den_string(const Rational& r);
// "p" when q == 1, else "p/q".
std::string rational_to_string(const Rational& r);

} // namespace fy
