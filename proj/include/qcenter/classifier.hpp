#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcenter/invariants.hpp"
#include "qcenter/quad_system.hpp"

namespace qcenter {

enum class MSet : int {
    M1 = 1, M2, M3, M4, M5, M6, M7, M8, M9, M10,
    M11, M12, M13, M14, M15, M16, M17, M18, M19
};

const char* mset_name(MSet m);
const char* mset_pattern(MSet m);  // multiplicity pattern, e.g. "r1 r1 c1 c1"
// Total multiplicity of finite singular points; -1 stands for infinite.
int mset_mf(MSet m);

// Signs of a family of comitants evaluated at one and the same rational
// point where none of them vanish, plus a consistency probe at the next
// three such points.
struct SignTranscript {
    bool has_point = false;
    std::pair<Rational, Rational> point{Rational(0), Rational(0)};
    std::vector<std::pair<std::string, int>> signs;
    std::vector<std::pair<Rational, Rational>> consistency_points;
    bool consistent = true;
    std::string note;
};

// Deterministic probe sequence (1,0),(0,1),(1,1),(1,-1),(2,1),(1,2),...
std::pair<long, long> sign_probe_point(int index);

// Every form passed in must be nonzero as a form.
SignTranscript sign_at_common_point(const std::vector<std::pair<std::string, const BinaryForm*>>& forms);

struct MfClassification {
    MSet set;
    std::string mf;       // "0".."4" or "infinite"
    std::string pattern;
    SignTranscript transcript;
};

MfClassification classify_mf(const ComitantSet& com);
MfClassification classify_mf(const QuadSystem& sys);

struct ClassificationReport {
    std::string mf;
    std::string pattern;
    MSet set_index = MSet::M19;
    std::optional<int> center_count;  // nullopt = not applicable (M19)
    std::string fired_rule;
    SignTranscript transcript;
    std::string diagnostics;
};

// Kapteyn-Sibirsky center conditions at the origin over any ordered scalar
// domain: I1 = I6 = 0, I2 < 0, and one of I3 = 0, I13 = 0, or
// 5 I3 - 2 I4 = 13 I3 - 10 I5 = 0.
template <class R, class IsZero, class SignFn>
bool center_conditions(const CenterTestScalars<R>& s, IsZero is_zero, SignFn sign_fn) {
    if (!is_zero(s.I1) || !is_zero(s.I6)) return false;
    if (sign_fn(s.I2) >= 0) return false;
    if (is_zero(s.I3) || is_zero(s.I13)) return true;
    R u = s.I3 * Rational(5) - s.I4 * Rational(2);
    R v = s.I3 * Rational(13) - s.I5 * Rational(10);
    return is_zero(u) && is_zero(v);
}

// Requires p00 = q00 = 0 (the origin is a singular point).
bool center_at_origin(const QuadSystem& sys);

ClassificationReport count_centers(const QuadSystem& sys);

}  // namespace qcenter
