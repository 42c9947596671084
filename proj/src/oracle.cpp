#include "qcenter/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>

#include "qcenter/classifier.hpp"
#include "qcenter/contraction.hpp"
#include "qcenter/invariants.hpp"

namespace qcenter {

const char* point_kind_name(PointKind k) {
    switch (k) {
        case PointKind::CenterCandidate: return "center-candidate";
        case PointKind::Saddle: return "saddle";
        case PointKind::Node: return "node";
        case PointKind::Degenerate: return "degenerate";
        case PointKind::Complex: return "complex";
    }
    return "?";
}

namespace {

struct FrameReject {};

int ypoly_deg(const YPoly& p) { return static_cast<int>(p.size()) - 1; }

void ypoly_normalize(YPoly& p) {
    for (auto& c : p) poly_normalize(c);
    while (!p.empty() && poly_is_zero(p.back())) p.pop_back();
}

YPoly ypoly_of(const QuadSystem& sys, int j) {
    const Rational c00 = j == 0 ? sys.p00 : sys.q00;
    const Rational c10 = j == 0 ? sys.p10 : sys.q10;
    const Rational c01 = j == 0 ? sys.p01 : sys.q01;
    const Rational c20 = j == 0 ? sys.p20 : sys.q20;
    const Rational c11 = j == 0 ? sys.p11 : sys.q11;
    const Rational c02 = j == 0 ? sys.p02 : sys.q02;
    YPoly p(3);
    p[0] = Poly{c00, c10, c20};
    p[1] = Poly{c01, c11};
    p[2] = Poly{c02};
    ypoly_normalize(p);
    return p;
}

double poly_eval_double(const Poly& p, double x) {
    double acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i].get_d();
    return acc;
}

Poly poly_matrix_det(std::vector<std::vector<Poly>>& m, std::vector<int>& cols, int row) {
    const int n = static_cast<int>(m.size());
    if (row == n) return poly_from({1});
    Poly acc;
    for (size_t ci = 0; ci < cols.size(); ++ci) {
        int col = cols[ci];
        if (poly_is_zero(m[static_cast<size_t>(row)][static_cast<size_t>(col)])) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (size_t cj = 0; cj < cols.size(); ++cj)
            if (cj != ci) rest.push_back(cols[cj]);
        Poly minor = poly_matrix_det(m, rest, row + 1);
        Poly term = poly_mul(m[static_cast<size_t>(row)][static_cast<size_t>(col)], minor);
        if (ci % 2 == 1) term = poly_neg(term);
        acc = poly_add(acc, term);
    }
    return acc;
}

}  // namespace

Poly sylvester_resultant(const YPoly& a, const YPoly& b) {
    const int m = ypoly_deg(a), n = ypoly_deg(b);
    if (m < 0 || n < 0) throw std::invalid_argument("sylvester_resultant of zero polynomial");
    if (m == 0 && n == 0) return poly_from({1});
    if (m == 0) {
        Poly r = poly_from({1});
        for (int i = 0; i < n; ++i) r = poly_mul(r, a[0]);
        return r;
    }
    if (n == 0) {
        Poly r = poly_from({1});
        for (int i = 0; i < m; ++i) r = poly_mul(r, b[0]);
        return r;
    }
    const int size = m + n;
    std::vector<std::vector<Poly>> mat(static_cast<size_t>(size), std::vector<Poly>(static_cast<size_t>(size)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            mat[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = a[static_cast<size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            mat[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = b[static_cast<size_t>(n - j)];
    std::vector<int> cols(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) cols[static_cast<size_t>(i)] = i;
    return poly_matrix_det(mat, cols, 0);
}

bool systems_share_factor(const QuadSystem& sys) {
    YPoly P = ypoly_of(sys, 0), Q = ypoly_of(sys, 1);
    const bool pz = P.empty(), qz = Q.empty();
    if (pz || qz) return true;  // at least one side identically zero
    auto content = [](const YPoly& f) {
        Poly c;
        for (const auto& coef : f) c = poly_gcd(c, coef);
        return c;
    };
    int dp = ypoly_deg(P), dq = ypoly_deg(Q);
    if (dp == 0 && dq == 0) return poly_deg(poly_gcd(P[0], Q[0])) > 0;
    if (dp == 0) return poly_deg(poly_gcd(P[0], content(Q))) > 0;
    if (dq == 0) return poly_deg(poly_gcd(Q[0], content(P))) > 0;
    if (poly_deg(poly_gcd(content(P), content(Q))) > 0) return true;
    return poly_is_zero(sylvester_resultant(P, Q));
}

namespace {

struct Fiber {
    Poly m;       // monic square-free factor of the resultant
    int mult;     // intersection multiplicity carried by each root
    Poly y_of_u;  // fiber v-coordinate as an element of Q[u]/(m)
};

struct FrameData {
    long k = 0;  // (x, y) = (u + k v, v)
    QuadSystem sysT;
    std::vector<Fiber> fibers;
    int total_multiplicity = 0;
    bool no_points = false;
};

std::pair<KYPoly, bool> ky_divmod_exact(const KYPoly& a, const KYPoly& b, const NumberField& K) {
    KYPoly rem = a, quot;
    ky_normalize(rem, K);
    if (b.empty()) throw std::invalid_argument("ky_divmod_exact: zero divisor");
    Poly lead_inv = K.inverse(b.back());
    if (ky_deg(rem) >= ky_deg(b)) quot.assign(static_cast<size_t>(ky_deg(rem) - ky_deg(b)) + 1, Poly{});
    while (ky_deg(rem) >= ky_deg(b)) {
        int shift = ky_deg(rem) - ky_deg(b);
        Poly f = K.mul(rem.back(), lead_inv);
        quot[static_cast<size_t>(shift)] = f;
        for (int i = 0; i <= ky_deg(b); ++i)
            rem[static_cast<size_t>(shift + i)] =
                K.sub(rem[static_cast<size_t>(shift + i)], K.mul(f, b[static_cast<size_t>(i)]));
        ky_normalize(rem, K);
    }
    return {quot, rem.empty()};
}

KYPoly ky_reduce_ypoly(const YPoly& p, const NumberField& K) {
    KYPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = K.reduce(p[i]);
    ky_normalize(r, K);
    return r;
}

// Fiber over the roots of one resultant factor: requires exactly one common
// point per root, with v-coordinate expressible in Q[u]/(m). Splits the
// factor on zero divisors; rejects the frame when two distinct points share
// a u-coordinate.
void analyze_factor(const YPoly& Pt, const YPoly& Qt, Poly factor, int mult, std::vector<Fiber>& out) {
    std::deque<Poly> work{std::move(factor)};
    while (!work.empty()) {
        Poly m = std::move(work.front());
        work.pop_front();
        if (poly_deg(m) < 1) continue;
        NumberField K{poly_monic(m)};
        try {
            KYPoly a = ky_reduce_ypoly(Pt, K), b = ky_reduce_ypoly(Qt, K);
            KYPoly g = ky_gcd(a, b, K);
            if (ky_deg(g) < 1) throw FrameReject{};
            if (ky_deg(g) > 1) {
                KYPoly sq = ky_gcd(g, ky_derivative(g, K), K);
                if (ky_deg(sq) < 1) throw FrameReject{};  // square-free of degree >= 2: two points share u
                auto [rad, exact] = ky_divmod_exact(g, sq, K);
                if (!exact || ky_deg(rad) != 1) throw FrameReject{};
                g = ky_monic(rad, K);
            }
            out.push_back({K.m, mult, K.reduce(poly_neg(g[0]))});
        } catch (const ModulusSplit& split) {
            Poly f = split.factor;
            Poly rest = poly_divmod(K.m, f).first;
            work.push_back(std::move(f));
            work.push_back(std::move(rest));
        }
    }
}

FrameData choose_frame(const QuadSystem& sys) {
    const BinaryForm P2 = sys.quad_part(0), Q2 = sys.quad_part(1);
    constexpr int kMaxFrames = 60;
    for (int attempt = 0; attempt < kMaxFrames; ++attempt) {
        long k = (attempt + 1) / 2;
        if (attempt % 2 == 1) k = -k;  // 0, 1, -1, 2, -2, ...
        // The v-direction (k : 1) must not be a common asymptotic direction.
        if (!P2.is_zero() || !Q2.is_zero()) {
            if (P2.eval(Rational(k), Rational(1)) == 0 && Q2.eval(Rational(k), Rational(1)) == 0) continue;
        }
        FrameData frame;
        frame.k = k;
        frame.sysT = sys.linear_transformed(Rational(1), Rational(k), Rational(0), Rational(1));
        YPoly Pt = ypoly_of(frame.sysT, 0), Qt = ypoly_of(frame.sysT, 1);
        if (Pt.empty() || Qt.empty()) throw DegenerateSystemError("zero component");
        if (ypoly_deg(Pt) == 0) {
            if (poly_deg(Pt[0]) == 0) {
                frame.no_points = true;  // P never vanishes
                return frame;
            }
            continue;  // v-free component: whole vertical fibers
        }
        if (ypoly_deg(Qt) == 0) {
            if (poly_deg(Qt[0]) == 0) {
                frame.no_points = true;
                return frame;
            }
            continue;
        }
        Poly res = sylvester_resultant(Pt, Qt);
        if (poly_is_zero(res)) continue;  // defensive; common factors are screened earlier
        if (poly_deg(res) == 0) {
            frame.no_points = true;
            return frame;
        }
        bool rejected = false;
        try {
            for (const auto& [factor, mult] : squarefree_decomposition(res))
                analyze_factor(Pt, Qt, factor, mult, frame.fibers);
        } catch (const FrameReject&) {
            rejected = true;
        }
        if (rejected) continue;
        frame.total_multiplicity = poly_deg(res);
        int check = 0;
        for (const auto& f : frame.fibers) check += poly_deg(f.m) * f.mult;
        if (check != frame.total_multiplicity)
            throw std::logic_error("oracle: fiber multiplicities do not add up to the resultant degree");
        return frame;
    }
    throw std::logic_error("oracle: no usable projection frame found");
}

// sigma, delta of the frame system along v = y(u), reduced mod m (trace and
// determinant are invariant under the frame's linear change of variables).
Poly sigma_poly_on_fiber(const QuadSystem& s, const Fiber& f, const NumberField& K) {
    Poly r{s.p10 + s.q01, 2 * s.p20 + s.q11};
    poly_normalize(r);
    return K.reduce(poly_add(r, poly_scale(f.y_of_u, s.p11 + 2 * s.q02)));
}

Poly linear_on_fiber(const Rational& c, const Rational& cu, const Rational& cv, const Poly& y) {
    Poly r{c, cu};
    poly_normalize(r);
    return poly_add(r, poly_scale(y, cv));
}

Poly delta_poly_on_fiber(const QuadSystem& s, const Fiber& f, const NumberField& K) {
    const Poly& y = f.y_of_u;
    Poly px = linear_on_fiber(s.p10, 2 * s.p20, s.p11, y);
    Poly py = linear_on_fiber(s.p01, s.p11, 2 * s.p02, y);
    Poly qx = linear_on_fiber(s.q10, 2 * s.q20, s.q11, y);
    Poly qy = linear_on_fiber(s.q01, s.q11, 2 * s.q02, y);
    return K.reduce(poly_sub(poly_mul(px, qy), poly_mul(py, qx)));
}

std::vector<std::complex<double>> approx_roots(const Poly& p) {
    int n = poly_deg(p);
    std::vector<std::complex<double>> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = p[static_cast<size_t>(i)].get_d();
    for (auto& v : c) v /= c.back();
    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    std::complex<double> seed(0.4, 0.9), acc(1, 0);
    for (int i = 0; i < n; ++i) {
        acc *= seed;
        z[static_cast<size_t>(i)] = acc;
    }
    for (int iter = 0; iter < 400; ++iter) {
        double shift = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> val = 0;
            for (int j = n; j >= 0; --j) val = val * z[static_cast<size_t>(i)] + c[static_cast<size_t>(j)];
            std::complex<double> den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            if (std::abs(den) < 1e-300) continue;
            std::complex<double> d = val / den;
            z[static_cast<size_t>(i)] -= d;
            shift = std::max(shift, std::abs(d));
        }
        if (shift < 1e-14) break;
    }
    return z;
}

struct KNum {
    const NumberField* K;
    Poly v;
    KNum operator+(const KNum& o) const { return {K, K->add(v, o.v)}; }
    KNum operator-(const KNum& o) const { return {K, K->sub(v, o.v)}; }
    KNum operator*(const KNum& o) const { return {K, K->mul(v, o.v)}; }
    KNum operator*(const Rational& s) const { return {K, K->scale(v, s)}; }
    KNum operator/(int d) const { return {K, K->scale(v, Rational(1, d))}; }
};

// Proposition 3 at an irrational point: shift the frame system so the point
// is the origin, coefficients living in Q[u]/(m), then decide the center
// conditions exactly at the given root.
bool center_at_algebraic_point(const QuadSystem& sT, const Fiber& fiber, const AlgebraicReal& root) {
    NumberField K{fiber.m};
    const Poly& y = fiber.y_of_u;
    auto knum = [&](Poly p) { return KNum{&K, K.reduce(std::move(p))}; };
    auto lin = [&](const Rational& c, const Rational& cu, const Rational& cv) {
        return knum(linear_on_fiber(c, cu, cv, y));
    };
    std::array<KNum, 12> c = {
        knum(Poly{}),                     // p00 (vanishes at the point)
        lin(sT.p10, 2 * sT.p20, sT.p11),  // shifted p10
        lin(sT.p01, sT.p11, 2 * sT.p02),  // shifted p01
        knum(Poly{sT.p20}),
        knum(Poly{sT.p11}),
        knum(Poly{sT.p02}),
        knum(Poly{}),
        lin(sT.q10, 2 * sT.q20, sT.q11),
        lin(sT.q01, sT.q11, 2 * sT.q02),
        knum(Poly{sT.q20}),
        knum(Poly{sT.q11}),
        knum(Poly{sT.q02}),
    };
    auto t = contraction::tensor_coeffs_from_poly<KNum>(c);
    auto s = center_test_scalars<KNum>(t, knum(Poly{}));
    auto is_zero = [&](const KNum& e) { return root.poly_is_zero_at(e.v); };
    auto sign_fn = [&](const KNum& e) { return root.sign_of_poly_at(e.v); };
    return center_conditions(s, is_zero, sign_fn);
}

struct RealPointCtx {
    size_t point_index;
    size_t fiber_index;
    RootInterval interval;
};

struct Analysis {
    FrameData frame;
    std::vector<SingularPoint> points;
    std::vector<RealPointCtx> real_points;
};

Analysis analyze(const QuadSystem& sys, OracleMode mode) {
    if (sys.is_zero()) throw DegenerateSystemError("zero vector field");
    if (systems_share_factor(sys)) throw DegenerateSystemError("P and Q share a polynomial factor");

    Analysis an;
    an.frame = choose_frame(sys);
    if (an.frame.no_points) return an;

    const Rational kq(an.frame.k);
    for (size_t fi = 0; fi < an.frame.fibers.size(); ++fi) {
        const Fiber& fiber = an.frame.fibers[fi];
        NumberField K{fiber.m};
        auto intervals = isolate_real_roots(fiber.m);

        int n_real = static_cast<int>(intervals.size());
        int n_complex = poly_deg(fiber.m) - n_real;
        if (n_complex > 0) {
            auto roots = approx_roots(fiber.m);
            std::vector<std::complex<double>> complex_roots;
            for (const auto& z : roots)
                if (std::abs(z.imag()) > 1e-9) complex_roots.push_back(z);
            if (static_cast<int>(complex_roots.size()) != n_complex)
                complex_roots.assign(static_cast<size_t>(n_complex), std::complex<double>(0, 0));
            for (const auto& z : complex_roots) {
                SingularPoint pt;
                pt.real = false;
                pt.multiplicity = fiber.mult;
                pt.kind = PointKind::Complex;
                std::complex<double> v(0, 0);
                for (size_t i = fiber.y_of_u.size(); i-- > 0;)
                    v = v * z + std::complex<double>(fiber.y_of_u[i].get_d());
                pt.x = z.real() + static_cast<double>(an.frame.k) * v.real();
                pt.x_imag = z.imag() + static_cast<double>(an.frame.k) * v.imag();
                pt.y = v.real();
                pt.y_imag = v.imag();
                an.points.push_back(std::move(pt));
            }
        }

        for (const auto& iv : intervals) {
            AlgebraicReal root(fiber.m, iv.lo, iv.hi);
            SingularPoint pt;
            pt.real = true;
            pt.multiplicity = fiber.mult;

            if (auto urat = root.to_rational()) {
                Rational v0 = poly_eval(fiber.y_of_u, *urat);
                Rational x0 = *urat + kq * v0;
                pt.exact_xy = {x0, v0};
                pt.x = x0.get_d();
                pt.y = v0.get_d();
                pt.sigma_exact = sys.sigma_at(x0, v0);
                pt.delta_exact = sys.delta_at(x0, v0);
                pt.sigma = pt.sigma_exact->get_d();
                pt.delta = pt.delta_exact->get_d();
                pt.sigma_sign = sign_of(*pt.sigma_exact);
                pt.delta_sign = sign_of(*pt.delta_exact);
            } else {
                double u0 = root.approx();
                double v0 = poly_eval_double(fiber.y_of_u, u0);
                pt.x = u0 + static_cast<double>(an.frame.k) * v0;
                pt.y = v0;
                Poly sig = sigma_poly_on_fiber(an.frame.sysT, fiber, K);
                Poly del = delta_poly_on_fiber(an.frame.sysT, fiber, K);
                pt.sigma = poly_eval_double(sig, u0);
                pt.delta = poly_eval_double(del, u0);
                if (mode == OracleMode::Exact) {
                    pt.sigma_sign = root.sign_of_poly_at(sig);
                    pt.delta_sign = root.sign_of_poly_at(del);
                }
            }

            const bool exact_info = pt.exact_xy.has_value() || mode == OracleMode::Exact;
            if (pt.multiplicity >= 2) {
                pt.kind = PointKind::Degenerate;
                if (exact_info && pt.delta_sign != 0)
                    throw std::logic_error("oracle: multiple point with nonsingular linearization");
            } else if (exact_info) {
                if (pt.delta_sign == 0) throw std::logic_error("oracle: simple point with singular linearization");
                if (pt.delta_sign < 0)
                    pt.kind = PointKind::Saddle;
                else
                    pt.kind = pt.sigma_sign == 0 ? PointKind::CenterCandidate : PointKind::Node;
            } else {
                if (pt.delta < 0)
                    pt.kind = PointKind::Saddle;
                else if (std::abs(pt.sigma) <= 1e-12)
                    pt.kind = PointKind::CenterCandidate;
                else
                    pt.kind = PointKind::Node;
                if (std::abs(pt.sigma) > 1e-12 && std::abs(pt.sigma) < 1e-6) pt.indeterminate = true;
            }
            an.real_points.push_back({an.points.size(), fi, iv});
            an.points.push_back(std::move(pt));
        }
    }
    return an;
}

}  // namespace

std::vector<SingularPoint> finite_singular_points(const QuadSystem& sys, OracleMode mode) {
    return analyze(sys, mode).points;
}

OracleVerdict oracle_center_count(const QuadSystem& sys, OracleMode mode) {
    OracleVerdict v;
    v.mode = mode;
    Analysis an;
    try {
        an = analyze(sys, mode);
    } catch (const DegenerateSystemError& e) {
        v.degenerate = true;
        v.diagnostics = e.what();
        return v;
    }

    double coeff_mag = 0;
    for (const auto& c : sys.coeffs()) coeff_mag = std::max(coeff_mag, std::abs(c.get_d()));

    for (const auto& ctx : an.real_points) {
        SingularPoint& pt = an.points[ctx.point_index];
        if (!pt.exact_xy) {
            Rational xr(pt.x), yr(pt.y);
            double res = std::max(std::abs(sys.eval_p(xr, yr).get_d()), std::abs(sys.eval_q(xr, yr).get_d()));
            v.max_residual = std::max(v.max_residual, res);
            if (mode == OracleMode::Numeric && res > 1e-9 * (1 + coeff_mag))
                v.diagnostics += "residual above tolerance at a numeric root; ";
        }
        if (pt.kind != PointKind::CenterCandidate) {
            if (pt.indeterminate) v.indeterminate = true;
            continue;
        }
        if (pt.exact_xy) {
            QuadSystem shifted = sys.translated(pt.exact_xy->first, pt.exact_xy->second);
            if (shifted.p00 != 0 || shifted.q00 != 0)
                throw std::logic_error("oracle: exact singular point does not zero the field");
            pt.is_center = center_at_origin(shifted);
        } else if (mode == OracleMode::Exact) {
            const Fiber& fiber = an.frame.fibers[ctx.fiber_index];
            AlgebraicReal root(fiber.m, ctx.interval.lo, ctx.interval.hi);
            pt.is_center = center_at_algebraic_point(an.frame.sysT, fiber, root);
        } else {
            pt.indeterminate = true;
            v.indeterminate = true;
            v.diagnostics += "center candidate with non-rational coordinates left undecided in numeric mode; ";
        }
        if (pt.is_center) ++v.center_count;
    }

    for (const auto& pt : an.points) v.total_multiplicity += pt.multiplicity;
    v.points = std::move(an.points);
    if (v.center_count > 2)
        throw std::logic_error("oracle: more than two centers, contradicting the quadratic-system bound");
    return v;
}

}  // namespace qcenter
