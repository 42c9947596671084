#pragma once

#include <array>

#include "qcenter/comitants.hpp"
#include "qcenter/contraction.hpp"
#include "qcenter/quad_system.hpp"

namespace qcenter {

// All scalar invariants for one system. A and C are 1-based (index 0 unused).
struct InvariantTable {
    std::array<Rational, 27> A{};
    std::array<Rational, 13> C{};
    Rational E1, E2;
    Rational I1, I2, I3, I4, I5, I6, I13, I17, I20;
    Rational J1, J2;
    BinaryForm K1{1};
    ComitantSet comitants;
};

std::array<Rational, 27> a_invariants(const HatComitants& hats);

void c_invariants(const std::array<Rational, 27>& A, std::array<Rational, 13>& C, Rational& E1, Rational& E2);

struct OriginInvariants {
    Rational I1, I2, I3, I4, I5, I6, I13, I17, I20;
    Rational J1, J2;
    BinaryForm K1{1};
};

OriginInvariants origin_invariants(const QuadSystem& sys);

InvariantTable compute_invariants(const QuadSystem& sys);
InvariantTable compute_invariants(const QuadSystem& sys, ComitantSet precomputed);

// The subset of center-affine invariants used by the origin center test,
// over an arbitrary commutative Q-algebra (the oracle evaluates them over
// real algebraic number fields).
template <class R>
struct CenterTestScalars {
    R I1, I2, I3, I4, I5, I6, I13;
};

const contraction::ContractionExpr& i_expr(int which);  // 1,2,3,4,5,6,13,17,20

template <class R>
CenterTestScalars<R> center_test_scalars(const contraction::TensorCoeffs<R>& t, const R& zero) {
    using contraction::contract_scalar;
    CenterTestScalars<R> s{contract_scalar(i_expr(1), t, zero),  contract_scalar(i_expr(2), t, zero),
                           contract_scalar(i_expr(3), t, zero),  contract_scalar(i_expr(4), t, zero),
                           contract_scalar(i_expr(5), t, zero),  contract_scalar(i_expr(6), t, zero),
                           contract_scalar(i_expr(13), t, zero)};
    return s;
}

}  // namespace qcenter
