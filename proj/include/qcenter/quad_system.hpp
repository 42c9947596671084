#pragma once

#include <array>
#include <optional>
#include <string>

#include "qcenter/binary_form.hpp"
#include "qcenter/rational.hpp"

namespace qcenter {

// Planar quadratic system
//   dx1/dt = P(x1,x2) = p00 + p10 x1 + p01 x2 + p20 x1^2 + p11 x1 x2 + p02 x2^2
//   dx2/dt = Q(x1,x2) = q00 + q10 x1 + q01 x2 + q20 x1^2 + q11 x1 x2 + q02 x2^2
// Tensor components follow the symmetric convention: the cross coefficient is
// split evenly, a^j_{12} = a^j_{21} = (xy coefficient)/2.
struct QuadSystem {
    Rational p00, p10, p01, p20, p11, p02;
    Rational q00, q10, q01, q20, q11, q02;

    static QuadSystem from_coeffs(const std::array<Rational, 12>& c);
    std::array<Rational, 12> coeffs() const;

    // j, a, b index from 0 (so a^1_{12} is tensor_quad(0, 0, 1)).
    Rational tensor_const(int j) const;
    Rational tensor_linear(int j, int a) const;
    Rational tensor_quad(int j, int a, int b) const;

    Rational const_part(int j) const;
    BinaryForm linear_part(int j) const;
    BinaryForm quad_part(int j) const;

    Rational eval_p(const Rational& x, const Rational& y) const;
    Rational eval_q(const Rational& x, const Rational& y) const;

    // Trace and determinant of the linearization at a point.
    Rational sigma_at(const Rational& x, const Rational& y) const;
    Rational delta_at(const Rational& x, const Rational& y) const;

    // System in coordinates (u,v) with x = u + h, y = v + k: the point (h,k)
    // becomes the origin.
    QuadSystem translated(const Rational& h, const Rational& k) const;

    // System in coordinates (u,v) with (x,y) = M (u,v); det M must be nonzero.
    QuadSystem linear_transformed(const Rational& m11, const Rational& m12, const Rational& m21,
                                  const Rational& m22) const;

    bool quadratic_part_zero() const;
    bool is_zero() const;

    bool operator==(const QuadSystem&) const = default;

    std::string to_string() const;
};

// Comma-separated 12-tuple of rationals, whitespace tolerated. On failure
// returns nullopt and reports a message plus the 1-based column offset.
std::optional<QuadSystem> parse_system_record(const std::string& line, std::string* error, size_t* error_column);

std::string system_record_string(const QuadSystem& sys);

}  // namespace qcenter
