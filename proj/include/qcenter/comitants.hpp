#pragma once

#include "qcenter/binary_form.hpp"
#include "qcenter/contraction.hpp"
#include "qcenter/quad_system.hpp"

namespace qcenter {

// Every named comitant of one system: the nine epsilon-contraction
// T-comitants, the determinant comitants, the derived transvectant
// combinations, and P, R, S, T, U.
struct ComitantSet {
    BinaryForm Ahat{0}, Bhat{3}, Chat{3}, Dhat{3}, Ehat{2}, Fhat{2}, Ghat{1}, Hhat{2}, Khat{2};

    Rational J1;
    BinaryForm B1{1}, B2{1}, B3{2}, B4{2}, B5{3};

    Rational mu1;
    BinaryForm H1{1}, G1{2}, G2{2}, G3{2};
    Rational D1;

    Rational mu, D;
    BinaryForm H{1}, G{2}, F{3}, V{4}, Stilde{2}, Ntilde{2}, K1{1};
    BinaryForm P{4}, R{2}, S{4}, T{6}, U{6};
};

// The nine T-comitants built by epsilon contraction.
struct HatComitants {
    BinaryForm A{0}, B{3}, C{3}, D{3}, E{2}, F{2}, G{1}, H{2}, K{2};
};

HatComitants hat_comitants(const QuadSystem& sys);

// J1 and B1..B5 from the 2x2 determinants of the homogeneous parts.
struct ClsComitants {
    Rational J1;
    BinaryForm B1{1}, B2{1}, B3{2}, B4{2}, B5{3};
};

ClsComitants cls_comitants(const QuadSystem& sys);

ComitantSet compute_comitants(const QuadSystem& sys);

// Access to the defining contraction expressions (shared with tests).
const contraction::ContractionExpr& hat_expr(char which);  // 'A'..'K'

}  // namespace qcenter
