#pragma once

#include <optional>
#include <tuple>

#include "qcenter/upoly.hpp"

namespace qcenter {

// Extended gcd: returns monic g and s, t with s*a + t*b = g.
std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b);

// Thrown when arithmetic modulo a reducible square-free modulus runs into a
// zero divisor; carries the discovered proper monic factor so the caller
// can split the modulus and retry per factor (dynamic evaluation).
struct ModulusSplit {
    Poly factor;
};

// Arithmetic in Q[x]/(m) for monic square-free m. Elements are reduced
// polynomials of degree < deg m.
struct NumberField {
    Poly m;

    Poly reduce(const Poly& p) const { return poly_rem(p, m); }
    Poly add(const Poly& a, const Poly& b) const { return poly_add(a, b); }
    Poly sub(const Poly& a, const Poly& b) const { return poly_sub(a, b); }
    Poly mul(const Poly& a, const Poly& b) const { return reduce(poly_mul(a, b)); }
    Poly scale(const Poly& a, const Rational& s) const { return poly_scale(a, s); }
    bool is_zero_elem(const Poly& a) const { return poly_is_zero(a); }
    // Throws ModulusSplit when a is a zero divisor, std::domain_error when
    // a == 0 in the quotient.
    Poly inverse(const Poly& a) const;
};

// One real root of a square-free rational polynomial: the polynomial plus
// an open isolating interval whose endpoints are not roots. Exact sign and
// zero tests against other polynomials refine the interval as needed.
class AlgebraicReal {
public:
    AlgebraicReal(Poly squarefree, Rational lo, Rational hi);

    const Poly& modulus() const { return m_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool known_rational() const { return exact_.has_value(); }

    void refine();
    void refine_below(const Rational& width);

    bool poly_is_zero_at(const Poly& p) const;
    int sign_of_poly_at(const Poly& p) const;
    std::optional<Rational> to_rational();
    double approx() const;

private:
    Poly m_;
    mutable Rational lo_, hi_;
    mutable std::optional<Rational> exact_;
    mutable bool rationality_checked_ = false;

    void refine_impl() const;
};

// Univariate polynomials over a number field (coefficients are reduced
// K-elements, index = power of the variable).
using KYPoly = std::vector<Poly>;

int ky_deg(const KYPoly& p);
void ky_normalize(KYPoly& p, const NumberField& K);
KYPoly ky_rem(const KYPoly& a, const KYPoly& b, const NumberField& K);
KYPoly ky_monic(const KYPoly& a, const NumberField& K);
KYPoly ky_gcd(KYPoly a, KYPoly b, const NumberField& K);
KYPoly ky_derivative(const KYPoly& a, const NumberField& K);

}  // namespace qcenter
