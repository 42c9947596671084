#pragma once

#include <string>
#include <vector>

#include "qcenter/rational.hpp"

namespace qcenter {

// Homogeneous polynomial in (x1, x2) with exact rational coefficients.
// coeff(i) is the coefficient of x1^(d-i) * x2^i. The zero form of every
// degree is representable; degree-0 forms double as scalars.
class BinaryForm {
public:
    explicit BinaryForm(int degree);
    static BinaryForm scalar(const Rational& value);
    static BinaryForm monomial(int degree, int y_power, const Rational& coeff);

    int degree() const { return degree_; }
    const Rational& coeff(int y_power) const { return coeffs_.at(y_power); }
    void set_coeff(int y_power, const Rational& value) { coeffs_.at(y_power) = value; }
    void add_to_coeff(int y_power, const Rational& value) { coeffs_.at(y_power) += value; }

    bool is_zero() const;
    // Degree-0 forms only.
    const Rational& scalar_value() const;

    BinaryForm dx1() const;
    BinaryForm dx2() const;
    Rational eval(const Rational& x1, const Rational& x2) const;

    BinaryForm operator-() const;
    BinaryForm& operator+=(const BinaryForm& o);
    BinaryForm& operator-=(const BinaryForm& o);

    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const Rational& s, const BinaryForm& f);
    friend bool operator==(const BinaryForm& a, const BinaryForm& b);
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

    std::string to_string() const;  // e.g. "x^2 - 1/2 x y + y^2"

private:
    int degree_;
    std::vector<Rational> coeffs_;
};

// Classical transvectant of index k of two binary forms. Requires
// k <= min(deg f, deg g); result has degree deg f + deg g - 2k.
BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int k);

}  // namespace qcenter
