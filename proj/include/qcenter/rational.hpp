#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace qcenter {

// Exact arithmetic everywhere in the main pipeline. GMP's mpq_class keeps
// values canonical (lowest terms, positive denominator) through arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign_of(const Rational& r) { return sgn(r); }

// Accepts "3/7", "-2", "+1/2", "0.25" (decimals are converted exactly).
std::optional<Rational> parse_rational(std::string_view text);

// "num/den", or just "num" when den == 1.
std::string rational_to_string(const Rational& r);

Integer factorial(int n);
Rational binomial(int n, int k);

}  // namespace qcenter
