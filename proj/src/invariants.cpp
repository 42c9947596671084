#include "qcenter/invariants.hpp"

#include <stdexcept>

namespace qcenter {

using namespace contraction;

namespace {

Rational tv_scalar(const BinaryForm& f, const BinaryForm& g, int k) { return transvectant(f, g, k).scalar_value(); }

const ContractionExpr& expr_I1() {
    static const ContractionExpr e{Term{rat(1), {a('A', 'A')}}};
    return e;
}
const ContractionExpr& expr_I2() {
    static const ContractionExpr e{Term{rat(1), {a('A', 'B'), a('B', 'A')}}};
    return e;
}
const ContractionExpr& expr_I3() {
    static const ContractionExpr e{Term{rat(1), {a('A', 'p'), a('B', 'A', 'q'), a('G', 'B', 'G'), eps_up('p', 'q')}}};
    return e;
}
const ContractionExpr& expr_I4() {
    static const ContractionExpr e{Term{rat(1), {a('A', 'p'), a('B', 'B', 'q'), a('G', 'A', 'G'), eps_up('p', 'q')}}};
    return e;
}
const ContractionExpr& expr_I5() {
    static const ContractionExpr e{Term{rat(1), {a('A', 'p'), a('B', 'G', 'q'), a('G', 'A', 'B'), eps_up('p', 'q')}}};
    return e;
}
const ContractionExpr& expr_I6() {
    static const ContractionExpr e{
        Term{rat(1), {a('A', 'p'), a('B', 'G'), a('G', 'A', 'q'), a('D', 'B', 'D'), eps_up('p', 'q')}}};
    return e;
}
const ContractionExpr& expr_I13() {
    static const ContractionExpr e{
        Term{rat(1),
             {a('A', 'p'), a('B', 'q', 'r'), a('G', 'G', 's'), a('D', 'A', 'B'), a('m', 'D', 'm'), eps_up('p', 'q'),
              eps_up('r', 's')}}};
    return e;
}
const ContractionExpr& expr_I17() {
    static const ContractionExpr e{Term{rat(1), {a('A'), a('B', 'A', 'B')}}};
    return e;
}
const ContractionExpr& expr_I20() {
    static const ContractionExpr e{Term{rat(1), {a('A'), a('B'), a('G'), a('D', 'A', 'B'), eps_lo('D', 'G')}}};
    return e;
}
const ContractionExpr& expr_K1() {
    static const ContractionExpr e{Term{rat(1), {a('A', 'A', 'B'), x('B')}}};
    return e;
}

}  // namespace

const ContractionExpr& i_expr(int which) {
    switch (which) {
        case 1: return expr_I1();
        case 2: return expr_I2();
        case 3: return expr_I3();
        case 4: return expr_I4();
        case 5: return expr_I5();
        case 6: return expr_I6();
        case 13: return expr_I13();
        case 17: return expr_I17();
        case 20: return expr_I20();
    }
    throw std::invalid_argument("i_expr: unknown invariant");
}

std::array<Rational, 27> a_invariants(const HatComitants& h) {
    std::array<Rational, 27> A{};
    auto tv = [](const BinaryForm& f, const BinaryForm& g, int k) { return transvectant(f, g, k); };

    A[1] = h.A.scalar_value();
    A[2] = tv_scalar(h.C, h.D, 3);
    A[3] = tv_scalar(tv(tv(h.C, h.G, 1), h.G, 1), h.G, 1);
    A[4] = tv_scalar(h.H, h.H, 2);
    A[5] = tv_scalar(h.H, h.K, 2);
    A[6] = tv_scalar(h.E, h.H, 2);
    A[7] = tv_scalar(tv(h.C, h.E, 2), h.G, 1);
    A[8] = tv_scalar(tv(h.D, h.H, 2), h.G, 1);
    A[9] = tv_scalar(tv(tv(h.D, h.G, 1), h.G, 1), h.G, 1);
    A[10] = tv_scalar(tv(h.D, h.K, 2), h.G, 1);
    A[11] = tv_scalar(h.F, h.K, 2);
    A[12] = tv_scalar(h.F, h.H, 2);
    A[13] = tv_scalar(tv(tv(h.C, h.H, 1), h.H, 2), h.G, 1);
    A[14] = tv_scalar(h.B, h.C, 3);
    A[15] = tv_scalar(h.E, h.F, 2);
    A[16] = tv_scalar(tv(tv(h.E, h.G, 1), h.C, 1), h.K, 2);
    A[17] = tv_scalar(tv(tv(h.D, h.D, 2), h.G, 1), h.G, 1);
    A[18] = tv_scalar(tv(h.D, h.F, 2), h.G, 1);
    A[19] = tv_scalar(tv(h.D, h.D, 2), h.H, 2);
    A[20] = tv_scalar(tv(h.C, h.D, 2), h.F, 2);
    A[21] = tv_scalar(tv(h.D, h.D, 2), h.K, 2);
    A[22] = tv_scalar(tv(tv(tv(tv(tv(h.C, h.D, 1), h.G, 1), h.G, 1), h.G, 1), h.G, 1), h.G, 1);
    A[23] = tv_scalar(tv(h.F, h.H, 1), h.K, 2);
    A[24] = tv_scalar(tv(tv(h.C, h.D, 2), h.K, 1), h.H, 2);
    A[25] = tv_scalar(tv(h.D, h.D, 2), h.E, 2);
    A[26] = tv_scalar(h.B, h.D, 3);
    return A;
}

void c_invariants(const std::array<Rational, 27>& A, std::array<Rational, 13>& C, Rational& E1, Rational& E2) {
    C[1] = 15 * A[2] * A[2] - 33 * A[17] - 8 * A[18] - 63 * A[19] - 6 * A[20] - 9 * A[21];
    C[2] = -3 * A[1] * A[2] + 2 * A[15];
    C[3] = A[2];
    C[4] = A[7];
    C[5] = -A[2] * A[3] + 2 * A[22];
    C[6] = 12 * A[1] * (4 * A[6] - A[7]) + 3 * A[2] * (4 * A[4] - A[3] + 12 * A[5]) + 6 * A[22] + 16 * A[23];
    C[7] = -20 * A[1] * A[7] - A[2] * A[3] + 2 * A[22];
    C[8] = -6 * A[1] * A[1] - 5 * A[8] - A[10] - A[11] - 3 * A[12];
    C[9] = A[4] - A[5];
    C[10] = A[26];
    C[11] = A[2] * A[2] - 10 * A[17] - 2 * A[18] - 6 * A[19] + 6 * A[21];
    C[12] = -A[1] * A[1] * (10 * A[3] + 9 * A[5]) - 3 * A[1] * A[16] + A[3] * (30 * A[8] - 7 * A[10] - 5 * A[11]) +
            A[4] * (-22 * A[8] + 18 * A[9] - 11 * A[10] + 3 * A[11]) + 18 * A[7] * (3 * A[6] + 5 * A[7]) +
            48 * A[2] * A[13] - 2 * A[6] * A[6] + A[5] * (46 * A[8] - 2 * A[9] + 5 * A[10] - 9 * A[11]);
    E1 = A[5];
    E2 = A[25];
}

OriginInvariants origin_invariants(const QuadSystem& sys) {
    auto t = tensor_coeffs(sys);
    const Rational zero(0);
    OriginInvariants r;
    r.I1 = contract_scalar(expr_I1(), t, zero);
    r.I2 = contract_scalar(expr_I2(), t, zero);
    r.I3 = contract_scalar(expr_I3(), t, zero);
    r.I4 = contract_scalar(expr_I4(), t, zero);
    r.I5 = contract_scalar(expr_I5(), t, zero);
    r.I6 = contract_scalar(expr_I6(), t, zero);
    r.I13 = contract_scalar(expr_I13(), t, zero);
    r.I17 = contract_scalar(expr_I17(), t, zero);
    r.I20 = contract_scalar(expr_I20(), t, zero);
    r.J1 = sys.p10 * sys.q01 - sys.p01 * sys.q10;
    r.J2 = r.I1 * (r.I2 - r.I1 * r.I1) + 4 * r.I1 * r.I17 - 4 * r.I20;
    r.K1 = contract(expr_K1(), sys);
    return r;
}

InvariantTable compute_invariants(const QuadSystem& sys) { return compute_invariants(sys, compute_comitants(sys)); }

InvariantTable compute_invariants(const QuadSystem& sys, ComitantSet precomputed) {
    InvariantTable t;
    t.comitants = std::move(precomputed);
    HatComitants h;
    h.A = t.comitants.Ahat;
    h.B = t.comitants.Bhat;
    h.C = t.comitants.Chat;
    h.D = t.comitants.Dhat;
    h.E = t.comitants.Ehat;
    h.F = t.comitants.Fhat;
    h.G = t.comitants.Ghat;
    h.H = t.comitants.Hhat;
    h.K = t.comitants.Khat;
    t.A = a_invariants(h);
    c_invariants(t.A, t.C, t.E1, t.E2);
    OriginInvariants oi = origin_invariants(sys);
    t.I1 = oi.I1;
    t.I2 = oi.I2;
    t.I3 = oi.I3;
    t.I4 = oi.I4;
    t.I5 = oi.I5;
    t.I6 = oi.I6;
    t.I13 = oi.I13;
    t.I17 = oi.I17;
    t.I20 = oi.I20;
    t.J1 = oi.J1;
    t.J2 = oi.J2;
    t.K1 = oi.K1;
    return t;
}

}  // namespace qcenter
