#include "qcenter/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcenter {

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

void poly_normalize(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool poly_is_zero(const Poly& p) { return p.empty(); }

Poly poly_from(std::initializer_list<long> coeffs) {
    Poly p;
    for (long c : coeffs) p.emplace_back(c);
    poly_normalize(p);
    return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_normalize(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_normalize(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    poly_normalize(r);
    return r;
}

Poly poly_scale(const Poly& a, const Rational& s) {
    if (s == 0) return {};
    Poly r = a;
    for (auto& c : r) c *= s;
    return r;
}

Poly poly_neg(const Poly& a) {
    Poly r = a;
    for (auto& c : r) c = -c;
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.empty()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    Poly rem = a, quot;
    int db = poly_deg(b);
    if (poly_deg(a) >= db) quot.assign(static_cast<size_t>(poly_deg(a) - db) + 1, Rational(0));
    const Rational& lead = b.back();
    while (poly_deg(rem) >= db) {
        int dr = poly_deg(rem);
        Rational f = rem.back() / lead;
        quot[static_cast<size_t>(dr - db)] = f;
        for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(dr - db + i)] -= f * b[static_cast<size_t>(i)];
        poly_normalize(rem);
    }
    poly_normalize(quot);
    return {quot, rem};
}

Poly poly_rem(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = Rational(static_cast<long>(i)) * p[i];
    poly_normalize(r);
    return r;
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

Poly poly_monic(const Poly& p) {
    if (p.empty()) return p;
    return poly_scale(p, Rational(1) / p.back());
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.empty()) {
        Poly r = poly_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return x;
    return poly_monic(x);
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    if (poly_deg(p) < 1) return out;
    Poly a = poly_monic(p);
    Poly d = poly_derivative(a);
    Poly g = poly_gcd(a, d);
    if (poly_deg(g) == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    // Yun's algorithm.
    Poly c = poly_divmod(a, g).first;
    Poly w = poly_divmod(d, g).first;
    int mult = 1;
    while (poly_deg(c) > 0) {
        Poly z = poly_sub(w, poly_derivative(c));
        Poly f = poly_gcd(c, z);
        if (poly_deg(f) > 0) out.emplace_back(poly_monic(f), mult);
        c = poly_divmod(c, f).first;
        w = poly_divmod(z, f).first;
        ++mult;
    }
    return out;
}

std::vector<Integer> primitive_integer_coeffs(const Poly& p) {
    if (p.empty()) return {};
    Integer den_lcm = 1;
    for (const auto& c : p) {
        Integer d = c.get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<Integer> out(p.size());
    Integer content = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        out[i] = p[i].get_num() * (den_lcm / p[i].get_den());
        Integer g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
        content = g;
    }
    if (content != 0 && content != 1)
        for (auto& c : out) c /= content;
    return out;
}

SturmChain::SturmChain(const Poly& squarefree) {
    if (poly_deg(squarefree) < 0) throw std::invalid_argument("SturmChain of zero polynomial");
    seq.push_back(squarefree);
    if (poly_deg(squarefree) == 0) return;
    seq.push_back(poly_derivative(squarefree));
    while (poly_deg(seq.back()) > 0) {
        Poly r = poly_rem(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        seq.push_back(poly_neg(r));
    }
}

namespace {
int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}
}  // namespace

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& p : seq) signs.push_back(sign_of(poly_eval(p, x)));
    return count_variations(signs);
}

int SturmChain::variations_at_minus_inf() const {
    std::vector<int> signs;
    for (const auto& p : seq) {
        int s = sign_of(p.back());
        if (poly_deg(p) % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int SturmChain::variations_at_plus_inf() const {
    std::vector<int> signs;
    for (const auto& p : seq) signs.push_back(sign_of(p.back()));
    return count_variations(signs);
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_real_roots() const { return variations_at_minus_inf() - variations_at_plus_inf(); }

Rational cauchy_root_bound(const Poly& p) {
    if (poly_deg(p) < 1) return Rational(1);
    Rational max(0);
    const Rational& lead = p.back();
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Rational q = abs(p[i] / lead);
        if (q > max) max = q;
    }
    return max + 1;
}

std::vector<RootInterval> isolate_real_roots(const Poly& squarefree) {
    std::vector<RootInterval> out;
    if (poly_deg(squarefree) < 1) return out;
    SturmChain chain(squarefree);
    Rational bound = cauchy_root_bound(squarefree);

    // (lo, hi] with the root count via Sturm; endpoints are never roots
    // (the Cauchy bound exceeds every root, splits happen at non-roots or
    // are pushed slightly when the midpoint is a root).
    struct Seg {
        Rational lo, hi;
        int count;
    };
    std::vector<Seg> work;
    int total = chain.count_roots(-bound, bound);
    if (total > 0) work.push_back({-bound, bound, total});
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rational mid = (s.lo + s.hi) / 2;
        if (poly_eval(squarefree, mid) == 0) {
            // Make mid an interior point of its own tiny interval.
            Rational eps = (s.hi - s.lo) / 4;
            while (chain.count_roots(mid - eps, mid + eps) > 1) eps /= 2;
            out.push_back({mid - eps, mid + eps});
            int left = chain.count_roots(s.lo, mid - eps);
            int right = chain.count_roots(mid + eps, s.hi);
            if (left > 0) work.push_back({s.lo, mid - eps, left});
            if (right > 0) work.push_back({mid + eps, s.hi, right});
            continue;
        }
        int left = chain.count_roots(s.lo, mid);
        int right = s.count - left;
        if (left > 0) work.push_back({s.lo, mid, left});
        if (right > 0) work.push_back({mid, s.hi, right});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

namespace {
Rational rational_floor(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return Rational(q);
}
}  // namespace

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("simplest_rational_in: empty interval");
    if (lo < 0 && hi > 0) return Rational(0);
    if (hi <= 0) return -simplest_rational_in(-hi, -lo);

    // 0 <= lo < hi: continued-fraction descent.
    Rational f = rational_floor(lo);
    Rational n = f + 1;
    if (n < hi) return n;  // the smallest integer above lo lies inside
    if (lo == f) {
        // (f, hi) with hi <= f+1: take f + 1/k for the least valid k.
        Rational k = rational_floor(1 / (hi - f)) + 1;
        return f + 1 / k;
    }
    return f + 1 / simplest_rational_in(1 / (hi - f), 1 / (lo - f));
}

}  // namespace qcenter
