#include "qcenter/contraction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace qcenter::contraction {

namespace {

int eps_value(int i, int j) {
    if (i == j) return 0;
    return i == 0 ? 1 : -1;  // eps_{12} = eps^{12} = 1
}

struct SlotUse {
    int upper = 0;
    int lower = 0;
};

void validate_term(const Term& term) {
    std::map<char, SlotUse> uses;
    for (const auto& f : term.factors) {
        switch (f.kind) {
            case FactorKind::CoeffConst:
                uses[f.j].upper++;
                break;
            case FactorKind::CoeffLinear:
                uses[f.j].upper++;
                uses[f.i1].lower++;
                break;
            case FactorKind::CoeffQuad:
                uses[f.j].upper++;
                uses[f.i1].lower++;
                uses[f.i2].lower++;
                break;
            case FactorKind::Variable:
                uses[f.i1].upper++;
                break;
            case FactorKind::EpsLower:
                uses[f.i1].lower++;
                uses[f.i2].lower++;
                break;
            case FactorKind::EpsUpper:
                uses[f.i1].upper++;
                uses[f.i2].upper++;
                break;
        }
    }
    for (const auto& [name, use] : uses) {
        if (use.upper != 1 || use.lower != 1)
            throw std::invalid_argument(std::string("contraction index '") + name +
                                        "' must appear exactly once up and once down");
    }
}

int component_id(const Factor& f, const std::map<char, int>& assign) {
    switch (f.kind) {
        case FactorKind::CoeffConst:
            return assign.at(f.j);
        case FactorKind::CoeffLinear:
            return 2 + assign.at(f.j) * 2 + assign.at(f.i1);
        case FactorKind::CoeffQuad: {
            int lo = assign.at(f.i1), hi = assign.at(f.i2);
            if (lo > hi) std::swap(lo, hi);
            // (0,0) -> 0, (0,1) -> 1, (1,1) -> 2
            return 6 + assign.at(f.j) * 3 + lo + hi;
        }
        default:
            throw std::logic_error("component_id on non-coefficient factor");
    }
}

}  // namespace

ContractionExpr::ContractionExpr(std::initializer_list<Term> terms) : terms_(terms) {
    if (terms_.empty()) throw std::invalid_argument("empty contraction expression");

    int degree = -1;
    std::map<std::pair<std::vector<uint8_t>, int>, Rational> merged;

    for (const auto& term : terms_) {
        validate_term(term);
        std::vector<char> indices;
        int x_count = 0;
        for (const auto& f : term.factors) {
            auto note = [&](char c) {
                if (c && std::find(indices.begin(), indices.end(), c) == indices.end()) indices.push_back(c);
            };
            note(f.j);
            note(f.i1);
            note(f.i2);
            if (f.kind == FactorKind::Variable) ++x_count;
        }
        if (degree < 0)
            degree = x_count;
        else if (degree != x_count)
            throw std::invalid_argument("contraction terms disagree on output degree");

        const size_t n = indices.size();
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
            std::map<char, int> assign;
            for (size_t i = 0; i < n; ++i) assign[indices[i]] = static_cast<int>((mask >> i) & 1);

            int eps_prod = 1;
            for (const auto& f : term.factors) {
                if (f.kind == FactorKind::EpsLower || f.kind == FactorKind::EpsUpper) {
                    eps_prod *= eps_value(assign.at(f.i1), assign.at(f.i2));
                    if (eps_prod == 0) break;
                }
            }
            if (eps_prod == 0) continue;

            std::vector<uint8_t> comps;
            int y_power = 0;
            for (const auto& f : term.factors) {
                switch (f.kind) {
                    case FactorKind::CoeffConst:
                    case FactorKind::CoeffLinear:
                    case FactorKind::CoeffQuad:
                        comps.push_back(static_cast<uint8_t>(component_id(f, assign)));
                        break;
                    case FactorKind::Variable:
                        y_power += assign.at(f.i1);
                        break;
                    default:
                        break;
                }
            }
            std::sort(comps.begin(), comps.end());
            merged[{comps, y_power}] += term.coeff * eps_prod;
        }
    }

    degree_ = degree;
    for (auto& [key, coeff] : merged) {
        if (coeff == 0) continue;
        monomials_.push_back({coeff, key.first, key.second});
    }
}

BinaryForm contract(const ContractionExpr& expr, const QuadSystem& sys) {
    auto t = tensor_coeffs(sys);
    BinaryForm out(expr.result_degree());
    for (const auto& m : expr.monomials()) {
        Rational prod = m.coeff;
        for (uint8_t id : m.comps) {
            if (t.comp[id] == 0) {
                prod = 0;
                break;
            }
            prod *= t.comp[id];
        }
        if (prod != 0) out.add_to_coeff(m.y_power, prod);
    }
    return out;
}

TensorCoeffs<Rational> tensor_coeffs(const QuadSystem& sys) {
    return tensor_coeffs_from_poly<Rational>(sys.coeffs());
}

}  // namespace qcenter::contraction
