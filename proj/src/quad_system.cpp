#include "qcenter/quad_system.hpp"

#include <sstream>
#include <stdexcept>

namespace qcenter {

QuadSystem QuadSystem::from_coeffs(const std::array<Rational, 12>& c) {
    return QuadSystem{c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7], c[8], c[9], c[10], c[11]};
}

std::array<Rational, 12> QuadSystem::coeffs() const {
    return {p00, p10, p01, p20, p11, p02, q00, q10, q01, q20, q11, q02};
}

Rational QuadSystem::tensor_const(int j) const { return j == 0 ? p00 : q00; }

Rational QuadSystem::tensor_linear(int j, int a) const {
    if (j == 0) return a == 0 ? p10 : p01;
    return a == 0 ? q10 : q01;
}

Rational QuadSystem::tensor_quad(int j, int a, int b) const {
    const Rational& c20 = j == 0 ? p20 : q20;
    const Rational& c11 = j == 0 ? p11 : q11;
    const Rational& c02 = j == 0 ? p02 : q02;
    if (a == 0 && b == 0) return c20;
    if (a == 1 && b == 1) return c02;
    return c11 / 2;
}

Rational QuadSystem::const_part(int j) const { return j == 0 ? p00 : q00; }

BinaryForm QuadSystem::linear_part(int j) const {
    BinaryForm f(1);
    f.set_coeff(0, j == 0 ? p10 : q10);
    f.set_coeff(1, j == 0 ? p01 : q01);
    return f;
}

BinaryForm QuadSystem::quad_part(int j) const {
    BinaryForm f(2);
    f.set_coeff(0, j == 0 ? p20 : q20);
    f.set_coeff(1, j == 0 ? p11 : q11);
    f.set_coeff(2, j == 0 ? p02 : q02);
    return f;
}

Rational QuadSystem::eval_p(const Rational& x, const Rational& y) const {
    return p00 + p10 * x + p01 * y + p20 * x * x + p11 * x * y + p02 * y * y;
}

Rational QuadSystem::eval_q(const Rational& x, const Rational& y) const {
    return q00 + q10 * x + q01 * y + q20 * x * x + q11 * x * y + q02 * y * y;
}

Rational QuadSystem::sigma_at(const Rational& x, const Rational& y) const {
    return (p10 + 2 * p20 * x + p11 * y) + (q01 + q11 * x + 2 * q02 * y);
}

Rational QuadSystem::delta_at(const Rational& x, const Rational& y) const {
    Rational px = p10 + 2 * p20 * x + p11 * y;
    Rational py = p01 + p11 * x + 2 * p02 * y;
    Rational qx = q10 + 2 * q20 * x + q11 * y;
    Rational qy = q01 + q11 * x + 2 * q02 * y;
    return px * qy - py * qx;
}

QuadSystem QuadSystem::translated(const Rational& h, const Rational& k) const {
    QuadSystem r = *this;
    r.p00 = eval_p(h, k);
    r.p10 = p10 + 2 * p20 * h + p11 * k;
    r.p01 = p01 + p11 * h + 2 * p02 * k;
    r.q00 = eval_q(h, k);
    r.q10 = q10 + 2 * q20 * h + q11 * k;
    r.q01 = q01 + q11 * h + 2 * q02 * k;
    return r;
}

QuadSystem QuadSystem::linear_transformed(const Rational& m11, const Rational& m12, const Rational& m21,
                                          const Rational& m22) const {
    Rational det = m11 * m22 - m12 * m21;
    if (det == 0) throw std::invalid_argument("linear_transformed: singular matrix");

    // P, Q composed with (x,y) = M(u,v).
    auto compose = [&](const Rational& c00, const Rational& c10, const Rational& c01, const Rational& c20,
                       const Rational& c11, const Rational& c02) {
        std::array<Rational, 6> r;
        r[0] = c00;
        r[1] = c10 * m11 + c01 * m21;
        r[2] = c10 * m12 + c01 * m22;
        r[3] = c20 * m11 * m11 + c11 * m11 * m21 + c02 * m21 * m21;
        r[4] = 2 * c20 * m11 * m12 + c11 * (m11 * m22 + m12 * m21) + 2 * c02 * m21 * m22;
        r[5] = c20 * m12 * m12 + c11 * m12 * m22 + c02 * m22 * m22;
        return r;
    };
    auto pp = compose(p00, p10, p01, p20, p11, p02);
    auto qq = compose(q00, q10, q01, q20, q11, q02);

    QuadSystem r;
    std::array<Rational*, 6> pr = {&r.p00, &r.p10, &r.p01, &r.p20, &r.p11, &r.p02};
    std::array<Rational*, 6> qr = {&r.q00, &r.q10, &r.q01, &r.q20, &r.q11, &r.q02};
    for (int i = 0; i < 6; ++i) {
        *pr[i] = (m22 * pp[i] - m12 * qq[i]) / det;
        *qr[i] = (-m21 * pp[i] + m11 * qq[i]) / det;
    }
    return r;
}

bool QuadSystem::quadratic_part_zero() const {
    return p20 == 0 && p11 == 0 && p02 == 0 && q20 == 0 && q11 == 0 && q02 == 0;
}

bool QuadSystem::is_zero() const {
    for (const auto& c : coeffs())
        if (c != 0) return false;
    return true;
}

std::string QuadSystem::to_string() const {
    std::ostringstream out;
    out << "P = ";
    BinaryForm l0 = linear_part(0), h0 = quad_part(0);
    out << rational_to_string(p00);
    if (!l0.is_zero()) out << " + " << l0.to_string();
    if (!h0.is_zero()) out << " + " << h0.to_string();
    out << ", Q = " << rational_to_string(q00);
    BinaryForm l1 = linear_part(1), h1 = quad_part(1);
    if (!l1.is_zero()) out << " + " << l1.to_string();
    if (!h1.is_zero()) out << " + " << h1.to_string();
    return out.str();
}

std::optional<QuadSystem> parse_system_record(const std::string& line, std::string* error, size_t* error_column) {
    std::array<Rational, 12> vals;
    size_t pos = 0;
    for (int field = 0; field < 12; ++field) {
        size_t comma = line.find(',', pos);
        std::string token;
        if (field < 11) {
            if (comma == std::string::npos) {
                if (error) *error = "expected 12 comma-separated rationals, found " + std::to_string(field + 1);
                if (error_column) *error_column = line.size() + 1;
                return std::nullopt;
            }
            token = line.substr(pos, comma - pos);
        } else {
            if (comma != std::string::npos) {
                if (error) *error = "more than 12 fields";
                if (error_column) *error_column = comma + 1;
                return std::nullopt;
            }
            token = line.substr(pos);
        }
        auto v = parse_rational(token);
        if (!v) {
            if (error) *error = "field " + std::to_string(field + 1) + ": invalid rational '" + token + "'";
            if (error_column) *error_column = pos + 1;
            return std::nullopt;
        }
        vals[static_cast<size_t>(field)] = *v;
        pos = comma + 1;
    }
    return QuadSystem::from_coeffs(vals);
}

std::string system_record_string(const QuadSystem& sys) {
    std::ostringstream out;
    auto c = sys.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out << ",";
        out << rational_to_string(c[i]);
    }
    return out.str();
}

}  // namespace qcenter
