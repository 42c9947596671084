#include "qcenter/comitants.hpp"

#include <stdexcept>

namespace qcenter {

using namespace contraction;

namespace {

// Index letters: 'A','B','G','w' stand in for alpha, beta, gamma, varkappa.
const ContractionExpr& expr_Ahat() {
    static const ContractionExpr e{
        Term{rat(1), {a('p', 'k'), a('q', 'A', 'm'), a('A', 'l', 'n'), eps_lo('p', 'q'), eps_up('k', 'l'), eps_up('m', 'n')}}};
    return e;
}

const ContractionExpr& expr_Bhat() {
    static const ContractionExpr e{
        Term{rat(2),
             {a('n'), a('h', 'u', 'A'), a('l', 'r'), a('k', 'p', 'B'), a('m', 'q', 's'), a('g', 'v', 'G'), x('A'),
              x('B'), x('G'), eps_lo('k', 'l'), eps_lo('m', 'n'), eps_lo('g', 'h'), eps_up('p', 'q'), eps_up('r', 's'),
              eps_up('u', 'v')}},
        Term{rat(-1),
             {a('n', 'u'), a('h', 'A'), a('l', 'r'), a('k', 'p', 'B'), a('m', 'q', 's'), a('g', 'v', 'G'), x('A'),
              x('B'), x('G'), eps_lo('k', 'l'), eps_lo('m', 'n'), eps_lo('g', 'h'), eps_up('p', 'q'), eps_up('r', 's'),
              eps_up('u', 'v')}}};
    return e;
}

const ContractionExpr& expr_Chat() {
    static const ContractionExpr e{Term{rat(1), {a('p', 'A', 'B'), x('q'), x('A'), x('B'), eps_lo('p', 'q')}}};
    return e;
}

const ContractionExpr& expr_Dhat() {
    static const ContractionExpr e{
        Term{rat(2),
             {a('p'), a('r', 'A', 'G'), a('u', 'B', 'w'), x('q'), x('s'), x('v'), eps_lo('p', 'q'), eps_lo('r', 's'),
              eps_lo('u', 'v'), eps_up('A', 'B'), eps_up('G', 'w')}},
        Term{rat(-1),
             {a('p', 'A'), a('r', 'G'), a('u', 'B', 'w'), x('q'), x('s'), x('v'), eps_lo('p', 'q'), eps_lo('r', 's'),
              eps_lo('u', 'v'), eps_up('A', 'B'), eps_up('G', 'w')}}};
    return e;
}

const ContractionExpr& expr_Ehat() {
    static const ContractionExpr e{
        Term{rat(1),
             {a('p', 'k'), a('q', 'A', 'm'), a('r', 'l', 'n'), x('s'), x('A'), eps_lo('p', 'q'), eps_lo('r', 's'),
              eps_up('k', 'l'), eps_up('m', 'n')}}};
    return e;
}

const ContractionExpr& expr_Fhat() {
    static const ContractionExpr e{
        Term{rat(1),
             {a('m', 's'), a('n', 'B'), a('k', 'p', 'r'), a('l', 'q', 'A'), x('A'), x('B'), eps_lo('k', 'l'),
              eps_lo('m', 'n'), eps_up('p', 'q'), eps_up('r', 's')}},
        Term{rat(-2),
             {a('k', 'r'), a('n', 'B'), a('m', 'p', 's'), a('l', 'q', 'A'), x('A'), x('B'), eps_lo('k', 'l'),
              eps_lo('m', 'n'), eps_up('p', 'q'), eps_up('r', 's')}},
        Term{rat(1),
             {a('k', 'p'), a('m', 'r'), a('n', 's', 'B'), a('l', 'q', 'A'), x('A'), x('B'), eps_lo('k', 'l'),
              eps_lo('m', 'n'), eps_up('p', 'q'), eps_up('r', 's')}},
        Term{rat(-4),
             {a('m'), a('k', 'p', 'r'), a('n', 's', 'B'), a('l', 'q', 'A'), x('A'), x('B'), eps_lo('k', 'l'),
              eps_lo('m', 'n'), eps_up('p', 'q'), eps_up('r', 's')}}};
    return e;
}

const ContractionExpr& expr_Ghat() {
    static const ContractionExpr e{Term{rat(1), {a('A', 'A', 'B'), x('B')}}};
    return e;
}

const ContractionExpr& expr_Hhat() {
    static const ContractionExpr e{
        Term{rat(1, 2),
             {a('p', 'r', 'A'), a('q', 's', 'B'), x('A'), x('B'), eps_lo('p', 'q'), eps_up('r', 's')}}};
    return e;
}

const ContractionExpr& expr_Khat() {
    static const ContractionExpr e{
        Term{rat(1, 2),
             {a('p', 'm', 'u'), a('r', 'n', 'v'), x('q'), x('s'), eps_lo('p', 'q'), eps_lo('r', 's'), eps_up('m', 'n'),
              eps_up('u', 'v')}}};
    return e;
}

void check_degree(const BinaryForm& f, int expected, const char* name) {
    if (f.degree() != expected)
        throw std::logic_error(std::string(name) + ": degree " + std::to_string(f.degree()) + ", expected " +
                               std::to_string(expected));
}

}  // namespace

const ContractionExpr& hat_expr(char which) {
    switch (which) {
        case 'A': return expr_Ahat();
        case 'B': return expr_Bhat();
        case 'C': return expr_Chat();
        case 'D': return expr_Dhat();
        case 'E': return expr_Ehat();
        case 'F': return expr_Fhat();
        case 'G': return expr_Ghat();
        case 'H': return expr_Hhat();
        case 'K': return expr_Khat();
    }
    throw std::invalid_argument("hat_expr: unknown comitant");
}

HatComitants hat_comitants(const QuadSystem& sys) {
    HatComitants h;
    h.A = contract(expr_Ahat(), sys);
    h.B = contract(expr_Bhat(), sys);
    h.C = contract(expr_Chat(), sys);
    h.D = contract(expr_Dhat(), sys);
    h.E = contract(expr_Ehat(), sys);
    h.F = contract(expr_Fhat(), sys);
    h.G = contract(expr_Ghat(), sys);
    h.H = contract(expr_Hhat(), sys);
    h.K = contract(expr_Khat(), sys);
    check_degree(h.A, 0, "Ahat");
    check_degree(h.B, 3, "Bhat");
    check_degree(h.C, 3, "Chat");
    check_degree(h.D, 3, "Dhat");
    check_degree(h.E, 2, "Ehat");
    check_degree(h.F, 2, "Fhat");
    check_degree(h.G, 1, "Ghat");
    check_degree(h.H, 2, "Hhat");
    check_degree(h.K, 2, "Khat");
    return h;
}

ClsComitants cls_comitants(const QuadSystem& sys) {
    ClsComitants c;
    const BinaryForm P1 = sys.linear_part(0), Q1 = sys.linear_part(1);
    const BinaryForm P2 = sys.quad_part(0), Q2 = sys.quad_part(1);
    const BinaryForm P2x = P2.dx1(), P2y = P2.dx2(), Q2x = Q2.dx1(), Q2y = Q2.dx2();

    c.J1 = sys.p10 * sys.q01 - sys.p01 * sys.q10;
    c.B1 = sys.p10 * Q2y - sys.q10 * P2y - (sys.p01 * Q2x - sys.q01 * P2x);
    c.B2 = sys.p00 * Q1 - sys.q00 * P1;
    c.B3 = rat(1, 4) * (P2x * Q2y - P2y * Q2x);
    c.B4 = sys.p00 * Q2 - sys.q00 * P2;
    c.B5 = P1 * Q2 - Q1 * P2;
    return c;
}

ComitantSet compute_comitants(const QuadSystem& sys) {
    ComitantSet r;
    HatComitants h = hat_comitants(sys);
    r.Ahat = h.A;
    r.Bhat = h.B;
    r.Chat = h.C;
    r.Dhat = h.D;
    r.Ehat = h.E;
    r.Fhat = h.F;
    r.Ghat = h.G;
    r.Hhat = h.H;
    r.Khat = h.K;

    ClsComitants c = cls_comitants(sys);
    r.J1 = c.J1;
    r.B1 = c.B1;
    r.B2 = c.B2;
    r.B3 = c.B3;
    r.B4 = c.B4;
    r.B5 = c.B5;

    r.mu1 = transvectant(r.B3, r.B3, 2).scalar_value();
    r.H1 = transvectant(r.B3, r.B1, 1);
    r.G1 = transvectant(r.B1, r.B5, 1);
    r.G2 = transvectant(r.B5, r.B5, 2);
    r.G3 = transvectant(r.B3, r.B4, 1);
    r.D1 = transvectant(transvectant(transvectant(r.Dhat, r.Dhat, 2), r.Dhat, 1), r.Dhat, 3).scalar_value();

    r.mu = -2 * r.mu1;
    r.D = -r.D1;
    r.H = rat(2) * r.H1;
    // The paper defines 2G = 4G1 - 3G2 + 8G3.
    r.G = rat(2) * r.G1 - rat(3, 2) * r.G2 + rat(4) * r.G3;
    r.Stilde = r.B3;
    r.Ntilde = r.Khat;
    r.K1 = r.Ghat;  // same defining contraction
    r.F = r.J1 * r.B5 + rat(2) * (r.B1 * r.B4) + rat(4) * (r.B2 * r.B3);
    r.V = r.B4 * r.B4 - r.B2 * r.B5;

    r.P = r.G * r.G - rat(6) * (r.F * r.H) + (12 * r.mu) * r.V;
    r.R = rat(12) * (r.H * r.H) - (8 * r.mu) * r.G;
    r.S = r.R * r.R - (16 * r.mu * r.mu) * r.P;
    BinaryForm G3f = r.G * r.G * r.G;
    BinaryForm bracket = rat(2) * G3f + (9 * r.mu) * (rat(3) * (r.F * r.F) - rat(8) * (r.G * r.V)) -
                         rat(18) * (r.F * r.G * r.H) + rat(108) * (r.H * r.H * r.V);
    r.T = (2 * r.mu) * bracket - r.P * r.R;
    r.U = r.F * r.F - rat(4) * (r.G * r.V);

    check_degree(r.H, 1, "H");
    check_degree(r.G, 2, "G");
    check_degree(r.F, 3, "F");
    check_degree(r.V, 4, "V");
    check_degree(r.Stilde, 2, "Stilde");
    check_degree(r.Ntilde, 2, "Ntilde");
    check_degree(r.K1, 1, "K1");
    check_degree(r.P, 4, "P");
    check_degree(r.R, 2, "R");
    check_degree(r.S, 4, "S");
    check_degree(r.T, 6, "T");
    check_degree(r.U, 6, "U");
    return r;
}

}  // namespace qcenter
