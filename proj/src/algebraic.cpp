#include "qcenter/algebraic.hpp"

#include <stdexcept>

namespace qcenter {

std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = poly_from({1}), s1;
    Poly t0, t1 = poly_from({1});
    while (!poly_is_zero(r1)) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        Poly t2 = poly_sub(t0, poly_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (poly_is_zero(r0)) return {r0, s0, t0};
    Rational lead = r0.back();
    return {poly_monic(r0), poly_scale(s0, 1 / lead), poly_scale(t0, 1 / lead)};
}

Poly NumberField::inverse(const Poly& a) const {
    Poly ar = reduce(a);
    if (poly_is_zero(ar)) throw std::domain_error("NumberField::inverse of zero");
    auto [g, s, t] = poly_xgcd(ar, m);
    (void)t;
    if (poly_deg(g) == 0) return reduce(s);
    if (poly_deg(g) == poly_deg(m)) throw std::domain_error("NumberField::inverse of zero (gcd = modulus)");
    throw ModulusSplit{g};
}

AlgebraicReal::AlgebraicReal(Poly squarefree, Rational lo, Rational hi)
    : m_(std::move(squarefree)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (poly_deg(m_) < 1) throw std::invalid_argument("AlgebraicReal: constant modulus");
    if (poly_deg(m_) == 1) {
        exact_ = -m_[0] / m_[1];
        lo_ = hi_ = *exact_;
        rationality_checked_ = true;
        return;
    }
    if (poly_eval(m_, lo_) == 0 || poly_eval(m_, hi_) == 0)
        throw std::invalid_argument("AlgebraicReal: interval endpoint is a root");
}

void AlgebraicReal::refine_impl() const {
    if (exact_) return;
    Rational mid = (lo_ + hi_) / 2;
    Rational v = poly_eval(m_, mid);
    if (v == 0) {
        exact_ = mid;
        lo_ = hi_ = mid;
        return;
    }
    if (sign_of(poly_eval(m_, lo_)) != sign_of(v))
        hi_ = mid;
    else
        lo_ = mid;
}

void AlgebraicReal::refine() { refine_impl(); }

void AlgebraicReal::refine_below(const Rational& width) {
    while (!exact_ && hi_ - lo_ >= width) refine_impl();
}

bool AlgebraicReal::poly_is_zero_at(const Poly& p) const {
    if (poly_is_zero(p)) return true;
    if (exact_) return poly_eval(p, *exact_) == 0;
    Poly g = poly_gcd(p, m_);
    if (poly_deg(g) == 0) return false;
    if (poly_deg(g) == poly_deg(m_)) return true;
    SturmChain chain(g);
    // g divides m, so the interval endpoints are not roots of g either.
    return chain.count_roots(lo_, hi_) == 1;
}

int AlgebraicReal::sign_of_poly_at(const Poly& p) const {
    if (exact_) return sign_of(poly_eval(p, *exact_));
    Poly r = poly_rem(p, m_);
    if (poly_is_zero(r)) return 0;
    if (poly_is_zero_at(r)) return 0;
    if (poly_deg(r) == 0) return sign_of(r[0]);
    // The root is not a zero of r: shrink the interval until r has no root
    // inside, then the sign is constant there.
    Poly rsf = poly_divmod(r, poly_gcd(r, poly_derivative(r))).first;
    SturmChain chain(rsf);
    for (;;) {
        if (exact_) return sign_of(poly_eval(r, *exact_));
        if (poly_eval(rsf, lo_) != 0 && poly_eval(rsf, hi_) != 0 && chain.count_roots(lo_, hi_) == 0)
            return sign_of(poly_eval(r, (lo_ + hi_) / 2));
        refine_impl();
    }
}

std::optional<Rational> AlgebraicReal::to_rational() {
    if (exact_) return exact_;
    if (rationality_checked_) return std::nullopt;
    rationality_checked_ = true;
    auto zc = primitive_integer_coeffs(m_);
    Integer lead = zc.back();
    if (lead < 0) lead = -lead;
    Rational target = Rational(1) / Rational(lead * lead + 1);
    refine_below(target);
    if (exact_) return exact_;
    Rational cand = simplest_rational_in(lo_, hi_);
    if (poly_eval(m_, cand) == 0) {
        exact_ = cand;
        lo_ = hi_ = cand;
        return exact_;
    }
    return std::nullopt;
}

double AlgebraicReal::approx() const {
    if (exact_) return exact_->get_d();
    Rational width = Rational(1, 1l << 30) * Rational(1, 1l << 30);
    const_cast<AlgebraicReal*>(this)->refine_below(width);
    if (exact_) return exact_->get_d();
    Rational mid = (lo_ + hi_) / 2;
    return mid.get_d();
}

int ky_deg(const KYPoly& p) { return static_cast<int>(p.size()) - 1; }

void ky_normalize(KYPoly& p, const NumberField& K) {
    for (auto& c : p) c = K.reduce(c);
    while (!p.empty() && poly_is_zero(p.back())) p.pop_back();
}

KYPoly ky_monic(const KYPoly& a, const NumberField& K) {
    if (a.empty()) return a;
    Poly inv = K.inverse(a.back());
    KYPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = K.mul(a[i], inv);
    return r;
}

KYPoly ky_rem(const KYPoly& a, const KYPoly& b, const NumberField& K) {
    if (b.empty()) throw std::invalid_argument("ky_rem: division by zero");
    KYPoly rem = a;
    ky_normalize(rem, K);
    Poly lead_inv = K.inverse(b.back());
    while (ky_deg(rem) >= ky_deg(b)) {
        int shift = ky_deg(rem) - ky_deg(b);
        Poly f = K.mul(rem.back(), lead_inv);
        for (int i = 0; i <= ky_deg(b); ++i)
            rem[static_cast<size_t>(shift + i)] =
                K.sub(rem[static_cast<size_t>(shift + i)], K.mul(f, b[static_cast<size_t>(i)]));
        ky_normalize(rem, K);
        if (rem.empty()) break;
    }
    return rem;
}

KYPoly ky_gcd(KYPoly a, KYPoly b, const NumberField& K) {
    ky_normalize(a, K);
    ky_normalize(b, K);
    while (!b.empty()) {
        KYPoly r = ky_rem(a, b, K);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return ky_monic(a, K);
}

KYPoly ky_derivative(const KYPoly& a, const NumberField& K) {
    if (a.size() <= 1) return {};
    KYPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = K.scale(a[i], Rational(static_cast<long>(i)));
    ky_normalize(r, K);
    return r;
}

}  // namespace qcenter
