#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "qcenter/binary_form.hpp"
#include "qcenter/quad_system.hpp"
#include "qcenter/rational.hpp"

namespace qcenter::contraction {

// A symbolic product of tensor factors over indices in {1,2}: coefficient
// tensors a^j, a^j_a, a^j_{ab}, phase variables x^a, and the epsilon tensors.
// Indices are named by chars; every name must occur exactly twice in a term,
// once in an upper slot and once in a lower slot (x factors carry the free
// content of the result through their values).
enum class FactorKind : uint8_t { CoeffConst, CoeffLinear, CoeffQuad, Variable, EpsLower, EpsUpper };

struct Factor {
    FactorKind kind;
    char j = 0;   // upper index of a coefficient tensor
    char i1 = 0;  // first lower index / variable index / first epsilon index
    char i2 = 0;  // second lower index / second epsilon index
};

inline Factor a(char j) { return {FactorKind::CoeffConst, j, 0, 0}; }
inline Factor a(char j, char s1) { return {FactorKind::CoeffLinear, j, s1, 0}; }
inline Factor a(char j, char s1, char s2) { return {FactorKind::CoeffQuad, j, s1, s2}; }
inline Factor x(char idx) { return {FactorKind::Variable, 0, idx, 0}; }
inline Factor eps_lo(char p, char q) { return {FactorKind::EpsLower, 0, p, q}; }
inline Factor eps_up(char p, char q) { return {FactorKind::EpsUpper, 0, p, q}; }

struct Term {
    Rational coeff;
    std::vector<Factor> factors;
};

// The 12 tensor components in a fixed order; entry 7 (10) is the halved
// cross coefficient a^1_{12} (a^2_{12}).
template <class R>
struct TensorCoeffs {
    std::array<R, 12> comp;
};

TensorCoeffs<Rational> tensor_coeffs(const QuadSystem& sys);

// Builds TensorCoeffs from polynomial coefficients in the record order
// p00,p10,p01,p20,p11,p02,q00,... over any ring with exact division by 2.
template <class R>
TensorCoeffs<R> tensor_coeffs_from_poly(const std::array<R, 12>& c) {
    TensorCoeffs<R> t;
    t.comp[0] = c[0];
    t.comp[1] = c[6];
    t.comp[2] = c[1];
    t.comp[3] = c[2];
    t.comp[4] = c[7];
    t.comp[5] = c[8];
    t.comp[6] = c[3];
    t.comp[7] = c[4] / 2;
    t.comp[8] = c[5];
    t.comp[9] = c[9];
    t.comp[10] = c[10] / 2;
    t.comp[11] = c[11];
    return t;
}

// One fully contracted assignment: a rational weight, the component ids to
// multiply, and the power of x^2 in the output monomial.
struct CompiledMonomial {
    Rational coeff;
    std::vector<uint8_t> comps;
    int y_power;
};

class ContractionExpr {
public:
    ContractionExpr(std::initializer_list<Term> terms);

    int result_degree() const { return degree_; }
    const std::vector<CompiledMonomial>& monomials() const { return monomials_; }
    const std::vector<Term>& terms() const { return terms_; }

private:
    std::vector<Term> terms_;
    std::vector<CompiledMonomial> monomials_;
    int degree_ = 0;
};

BinaryForm contract(const ContractionExpr& expr, const QuadSystem& sys);

// Degree-0 expressions evaluated over an arbitrary commutative Q-algebra.
template <class R>
R contract_scalar(const ContractionExpr& expr, const TensorCoeffs<R>& t, const R& zero) {
    if (expr.result_degree() != 0) throw std::logic_error("contract_scalar on a form-valued expression");
    R acc = zero;
    for (const auto& m : expr.monomials()) {
        R prod = t.comp[m.comps[0]];
        for (size_t i = 1; i < m.comps.size(); ++i) prod = prod * t.comp[m.comps[i]];
        acc = acc + prod * m.coeff;
    }
    return acc;
}

}  // namespace qcenter::contraction
