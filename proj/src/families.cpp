#include "qcenter/families.hpp"

#include <stdexcept>

#include "qcenter/oracle.hpp"

namespace qcenter {

const char* family_name(Family f) {
    switch (f) {
        case Family::PlacedPoints: return "placed-points";
        case Family::Hamiltonian: return "hamiltonian";
        case Family::Reversible: return "reversible";
        case Family::CanonicalPaper: return "canonical-paper";
        case Family::Random: return "random";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::PlacedPoints, Family::Hamiltonian, Family::Reversible, Family::CanonicalPaper,
                     Family::Random})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

QuadSystem random_system(Rng& rng, long max_num, long max_den) {
    std::array<Rational, 12> c;
    for (auto& v : c) v = rng.rational(max_num, max_den);
    return QuadSystem::from_coeffs(c);
}

QuadSystem paper_system_5(const Rational& c, const Rational& d, const Rational& h, const Rational& e,
                          const Rational& f, const Rational& m) {
    return QuadSystem{0, c, d, -c, 2 * h, -d, 0, e, f, -e, 2 * m, -f};
}

QuadSystem paper_system_10(const Rational& c, const Rational& d, const Rational& h, const Rational& e) {
    return QuadSystem{0, c, d, -c, 2 * h, -d, 0, e, -c, -e, 2 * c, c};
}

QuadSystem paper_system_24(const Rational& c, const Rational& d) {
    return QuadSystem{0, 0, 1, 0, 2 * (1 - c), 0, 0, -1, 0, d, 0, c};
}

QuadSystem paper_system_25(const Rational& a, const Rational& b, const Rational& c) {
    return QuadSystem{0, 0, -1, -c, 0, -a, 0, 1, 0, b, 2 * c, 0};
}

QuadSystem paper_system_29(const Rational& d, const Rational& h, const Rational& k, const Rational& e) {
    return QuadSystem{0, 0, d, 0, 2 * h, k, 0, e, 0, -e, 0, -h};
}

QuadSystem paper_system_33(const Rational& d, const Rational& k) {
    return QuadSystem{0, 1, d, -1, 4, k, 0, 0, -1, 0, 2, -2};
}

QuadSystem paper_system_45(const Rational& h, const Rational& f, const Rational& m, const Rational& n) {
    return QuadSystem{0, 0, 0, 0, 2 * h, 2 * f * h, 0, 1, f, -1, 2 * m, n};
}

QuadSystem paper_system_58(const Rational& c, const Rational& d, const Rational& e) {
    return QuadSystem{0, c, d, -c, 0, 0, 0, e, -c, -e, 2 * c, 0};
}

QuadSystem paper_system_67(const Rational& g, const Rational& e, const Rational& f, const Rational& l,
                           const Rational& m) {
    return QuadSystem{0, 0, 1, g, 0, 0, 0, e, f, l, 2 * m, 0};
}

QuadSystem paper_system_89(const Rational& c, const Rational& e, const Rational& f, const Rational& m) {
    return QuadSystem{0, c, 1, 0, 0, 0, 0, e, f, 2 * c * m, 2 * m, 0};
}

QuadSystem paper_system_91(const Rational& c, const Rational& e, const Rational& f, const Rational& n) {
    return QuadSystem{0, c, 1, 0, 0, 0, 0, e, f, c * c * n, 2 * c * n, n};
}

QuadSystem random_paper_system(Rng& rng, int* which) {
    static const int ids[] = {5, 10, 24, 25, 29, 33, 45, 58, 67, 89, 91};
    int id = ids[rng.int_in(0, 10)];
    if (which) *which = id;
    auto r = [&] { return rng.rational(4, 2); };
    switch (id) {
        case 5: return paper_system_5(r(), r(), r(), r(), r(), r());
        case 10: return paper_system_10(r(), r(), r(), r());
        case 24: return paper_system_24(r(), r());
        case 25: return paper_system_25(r(), r(), r());
        case 29: return paper_system_29(r(), r(), r(), r());
        case 33: return paper_system_33(r(), r());
        case 45: return paper_system_45(r(), r(), r(), r());
        case 58: return paper_system_58(r(), r(), r());
        case 67: return paper_system_67(r(), r(), r(), r(), r());
        case 89: return paper_system_89(r(), r(), r(), r());
        case 91: return paper_system_91(r(), r(), r(), r());
    }
    throw std::logic_error("unreachable");
}

QuadSystem random_affine_image(const QuadSystem& sys, Rng& rng, bool unimodular) {
    Rational m11, m12, m21, m22;
    if (unimodular) {
        // Product of elementary shears has determinant exactly 1.
        long a = rng.int_in(-2, 2), b = rng.int_in(-2, 2), c = rng.int_in(-2, 2);
        m11 = Rational(1 + a * b);
        m12 = Rational(a);
        m21 = Rational(b + c + a * b * c);
        m22 = Rational(1 + a * c);
    } else {
        for (;;) {
            m11 = rng.rational(3, 2);
            m12 = rng.rational(3, 2);
            m21 = rng.rational(3, 2);
            m22 = rng.rational(3, 2);
            if (m11 * m22 - m12 * m21 != 0) break;
        }
    }
    Rational t1 = rng.rational(3, 2), t2 = rng.rational(3, 2);
    return sys.translated(t1, t2).linear_transformed(m11, m12, m21, m22);
}

QuadSystem generate_family(Family f, Rng& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        QuadSystem sys;
        switch (f) {
            case Family::PlacedPoints: {
                QuadSystem base = paper_system_5(rng.rational(4, 2), rng.rational(4, 2), rng.rational(4, 2),
                                                 rng.rational(4, 2), rng.rational(4, 2), rng.rational(4, 2));
                sys = random_affine_image(base, rng);
                break;
            }
            case Family::Hamiltonian: {
                // H = a30 x^3 + a21 x^2 y + a12 x y^2 + a03 y^3
                //   + a20 x^2 + a11 x y + a02 y^2 + a10 x + a01 y
                Rational a30 = rng.rational(3, 2), a21 = rng.rational(3, 2), a12 = rng.rational(3, 2);
                Rational a03 = rng.rational(3, 2), a20 = rng.rational(3, 2), a11 = rng.rational(3, 2);
                Rational a02 = rng.rational(3, 2), a10 = rng.rational(3, 2), a01 = rng.rational(3, 2);
                sys = QuadSystem{a01, a11, 2 * a02, a21,     2 * a12,  3 * a03,
                                 -a10, -2 * a20, -a11, -3 * a30, -2 * a21, -a12};
                break;
            }
            case Family::Reversible: {
                if (rng.coin()) {
                    // Invariant under (x,t) -> (-x,-t): P even in x, Q odd in x.
                    sys = QuadSystem{rng.rational(4, 2), 0, rng.rational(4, 2), rng.rational(4, 2), 0,
                                     rng.rational(4, 2), 0, rng.rational(4, 2), 0, 0, rng.rational(4, 2), 0};
                } else {
                    // Invariant under (y,t) -> (-y,-t): P odd in y, Q even in y.
                    sys = QuadSystem{0, 0, rng.rational(4, 2), 0, rng.rational(4, 2), 0,
                                     rng.rational(4, 2), rng.rational(4, 2), 0, rng.rational(4, 2), 0,
                                     rng.rational(4, 2)};
                }
                break;
            }
            case Family::CanonicalPaper:
                sys = random_paper_system(rng);
                break;
            case Family::Random:
                sys = random_system(rng);
                break;
        }
        if (sys.is_zero()) continue;
        if (systems_share_factor(sys)) continue;
        return sys;
    }
    throw std::runtime_error("generate_family: could not draw a nondegenerate system");
}

QuadSystem random_mu_zero_system(Rng& rng) {
    // Quadratic parts with no y^2 terms make B3 a multiple of x^2, so its
    // discriminant mu vanishes identically.
    QuadSystem base{rng.rational(4, 2), rng.rational(4, 2), rng.rational(4, 2), rng.rational(4, 2),
                    rng.rational(4, 2), 0,
                    rng.rational(4, 2), rng.rational(4, 2), rng.rational(4, 2), rng.rational(4, 2),
                    rng.rational(4, 2), 0};
    return random_affine_image(base, rng, true);
}

QuadSystem random_mu_d_zero_system(Rng& rng) {
    // Normal form of the one-simple-one-double configuration: d = c u,
    // f = e u collapses D as well.
    Rational c = rng.rational(3, 2), e = rng.rational(3, 2), u = rng.rational(3, 2);
    Rational h = rng.rational(3, 2), m = rng.rational(3, 2);
    QuadSystem base{0, c, c * u, -c, 2 * h, 0, 0, e, e * u, -e, 2 * m, 0};
    return random_affine_image(base, rng, true);
}

}  // namespace qcenter
