#pragma once

#include <utility>
#include <vector>

#include "qcenter/rational.hpp"

namespace qcenter {

// Dense univariate polynomial over Q: c[i] is the coefficient of x^i.
// Normalized form has no trailing zero coefficients; the zero polynomial is
// the empty vector (degree -1).
using Poly = std::vector<Rational>;

int poly_deg(const Poly& p);
void poly_normalize(Poly& p);
bool poly_is_zero(const Poly& p);
Poly poly_from(std::initializer_list<long> coeffs);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& s);
Poly poly_neg(const Poly& a);

// Field division: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_rem(const Poly& a, const Poly& b);

Poly poly_derivative(const Poly& p);
Rational poly_eval(const Poly& p, const Rational& x);
Poly poly_monic(const Poly& p);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic gcd

// Yun's algorithm: p ~ prod factors[i].first ^ factors[i].second with each
// factor square-free and pairwise coprime, multiplicities strictly
// increasing in the output.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// Primitive integer form: clears denominators and content.
std::vector<Integer> primitive_integer_coeffs(const Poly& p);

// Sturm chain of a square-free polynomial.
struct SturmChain {
    std::vector<Poly> seq;
    explicit SturmChain(const Poly& squarefree);
    int variations_at(const Rational& x) const;
    int variations_at_minus_inf() const;
    int variations_at_plus_inf() const;
    // Number of real roots in the half-open interval (a, b].
    int count_roots(const Rational& a, const Rational& b) const;
    int count_real_roots() const;
};

// Strictly larger than the absolute value of every complex root.
Rational cauchy_root_bound(const Poly& p);

// Isolating intervals for all real roots of a square-free polynomial,
// sorted increasingly. Each interval (lo, hi) is open, contains exactly one
// root, and the endpoints are not roots.
struct RootInterval {
    Rational lo, hi;
};
std::vector<RootInterval> isolate_real_roots(const Poly& squarefree);

// The unique rational with smallest denominator (then smallest numerator)
// in the open interval (lo, hi).
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

}  // namespace qcenter
