#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcenter/algebraic.hpp"
#include "qcenter/quad_system.hpp"
#include "qcenter/upoly.hpp"

namespace qcenter {

// P = 0 and Q = 0 share a polynomial factor (a whole curve of singular
// points), or the field is identically zero.
struct DegenerateSystemError : std::runtime_error {
    explicit DegenerateSystemError(const std::string& what) : std::runtime_error(what) {}
};

enum class PointKind { CenterCandidate, Saddle, Node, Degenerate, Complex };
enum class OracleMode { Exact, Numeric };

const char* point_kind_name(PointKind k);

struct SingularPoint {
    bool real = true;
    int multiplicity = 1;
    // Exact coordinates when both are rational.
    std::optional<std::pair<Rational, Rational>> exact_xy;
    double x = 0, y = 0;            // approximation; real part for complex points
    double x_imag = 0, y_imag = 0;  // complex points only
    std::optional<Rational> sigma_exact, delta_exact;
    double sigma = 0, delta = 0;
    int sigma_sign = 0, delta_sign = 0;  // exact signs for real points in exact mode
    PointKind kind = PointKind::Complex;
    bool is_center = false;       // Proposition-3 verdict for center candidates
    bool indeterminate = false;   // numeric mode could not certify this point
};

struct OracleVerdict {
    std::vector<SingularPoint> points;
    int center_count = 0;
    bool indeterminate = false;
    bool degenerate = false;
    OracleMode mode = OracleMode::Exact;
    int total_multiplicity = 0;  // m_f: sum over real and complex points
    double max_residual = 0;
    std::string diagnostics;
};

// All finite singular points with multiplicities, real and complex.
// Exact mode decides sigma = 0 / delta signs exactly, including at
// irrational (real algebraic) points. Throws DegenerateSystemError when P
// and Q share a factor or the field is zero.
std::vector<SingularPoint> finite_singular_points(const QuadSystem& sys, OracleMode mode = OracleMode::Exact);

// Independent center count: locates singular points, keeps the simple real
// ones with sigma = 0 and delta > 0, translates each to the origin and
// applies the Kapteyn-Sibirsky conditions (Proposition 3). Never consults
// the C-invariants or the classification theorems.
OracleVerdict oracle_center_count(const QuadSystem& sys, OracleMode mode = OracleMode::Exact);

// Resultant of two polynomials in v with Poly-in-u coefficients
// (ascending v powers), via the Sylvester determinant.
using YPoly = std::vector<Poly>;
Poly sylvester_resultant(const YPoly& a, const YPoly& b);

// True when P and Q have a common nonconstant polynomial factor.
bool systems_share_factor(const QuadSystem& sys);

}  // namespace qcenter
