#include "qcenter/classifier.hpp"

#include <numeric>
#include <stdexcept>

namespace qcenter {

const char* mset_name(MSet m) {
    static const char* names[] = {"M1",  "M2",  "M3",  "M4",  "M5",  "M6",  "M7",  "M8",  "M9",  "M10",
                                  "M11", "M12", "M13", "M14", "M15", "M16", "M17", "M18", "M19"};
    return names[static_cast<int>(m) - 1];
}

const char* mset_pattern(MSet m) {
    static const char* patterns[] = {"r1 r1 r1 r1", "r1 r1 c1 c1", "c1 c1 c1 c1", "r2 r1 r1", "r2 c1 c1",
                                     "r2 r2",       "c2 c2",       "r3 r1",       "r4",       "r1 r1 r1",
                                     "r1 c1 c1",    "r2 r1",       "r3",          "r1 r1",    "c1 c1",
                                     "r2",          "r1",          "-",           "-"};
    return patterns[static_cast<int>(m) - 1];
}

int mset_mf(MSet m) {
    static const int mf[] = {4, 4, 4, 4, 4, 4, 4, 4, 4, 3, 3, 3, 3, 2, 2, 2, 1, 0, -1};
    return mf[static_cast<int>(m) - 1];
}

std::pair<long, long> sign_probe_point(int index) {
    // s = |a|+|b| ascending; within s first b >= 0 with a descending, then
    // b < 0 with a descending; only coprime pairs.
    int seen = 0;
    for (long s = 1;; ++s) {
        for (long a = s; a >= 0; --a) {
            long b = s - a;
            if (std::gcd(a, b) != 1) continue;
            if (seen++ == index) return {a, b};
        }
        for (long a = s - 1; a >= 1; --a) {
            long b = s - a;
            if (std::gcd(a, b) != 1) continue;
            if (seen++ == index) return {a, -b};
        }
    }
}

SignTranscript sign_at_common_point(const std::vector<std::pair<std::string, const BinaryForm*>>& forms) {
    for (const auto& [name, f] : forms)
        if (f->is_zero()) throw std::invalid_argument("sign_at_common_point: form '" + name + "' is identically zero");

    SignTranscript t;
    std::vector<int> first_signs;
    int found = 0;
    for (int idx = 0; found < 4 && idx < 100000; ++idx) {
        auto [a, b] = sign_probe_point(idx);
        Rational x(a), y(b);
        std::vector<int> signs;
        signs.reserve(forms.size());
        bool ok = true;
        for (const auto& [name, f] : forms) {
            int s = sign_of(f->eval(x, y));
            if (s == 0) {
                ok = false;
                break;
            }
            signs.push_back(s);
        }
        if (!ok) continue;
        if (found == 0) {
            t.has_point = true;
            t.point = {x, y};
            first_signs = signs;
            for (size_t i = 0; i < forms.size(); ++i) t.signs.emplace_back(forms[i].first, signs[i]);
        } else {
            t.consistency_points.emplace_back(x, y);
            if (signs != first_signs) {
                t.consistent = false;
                t.note += "sign pattern differs at (" + rational_to_string(x) + "," + rational_to_string(y) + "); ";
            }
        }
        ++found;
    }
    if (!t.has_point) throw std::logic_error("sign_at_common_point: no valid probe point found");
    return t;
}

MfClassification classify_mf(const QuadSystem& sys) { return classify_mf(compute_comitants(sys)); }

MfClassification classify_mf(const ComitantSet& com) {
    const int mu_sign = sign_of(com.mu);
    const int d_sign = sign_of(com.D);
    const bool Rz = com.R.is_zero(), Sz = com.S.is_zero(), Tz = com.T.is_zero();
    const bool Pz = com.P.is_zero(), Uz = com.U.is_zero(), Vz = com.V.is_zero();

    SignTranscript transcript;
    bool row[20] = {};

    if (mu_sign != 0) {
        if (d_sign < 0) {
            if (!Rz && !Sz) {
                transcript = sign_at_common_point({{"R", &com.R}, {"S", &com.S}});
                bool both_pos = transcript.signs[0].second > 0 && transcript.signs[1].second > 0;
                row[1] = both_pos;
                row[3] = !both_pos;
            } else {
                // R = 0 or S = 0 as a form satisfies (R<=0) v (S<=0).
                row[3] = true;
                transcript.note = "R or S identically zero";
            }
        } else if (d_sign > 0) {
            row[2] = true;
        } else {
            if (!Tz) {
                transcript = sign_at_common_point({{"T", &com.T}});
                row[4] = transcript.signs[0].second < 0;
                row[5] = transcript.signs[0].second > 0;
            } else if (!Pz) {
                if (!Rz) {
                    transcript = sign_at_common_point({{"P", &com.P}, {"R", &com.R}});
                    int pr = transcript.signs[0].second * transcript.signs[1].second;
                    row[6] = pr > 0;
                    row[7] = pr < 0;
                }
                // T = 0, P != 0, R = 0 matches no row; caught below.
            } else {
                row[8] = !Rz;
                row[9] = Rz;
            }
        }
    } else {
        if (!Rz) {
            if (d_sign < 0)
                row[10] = true;
            else if (d_sign > 0)
                row[11] = true;
            else {
                row[12] = !Pz;
                row[13] = Pz;
            }
        } else if (!Pz) {
            if (!Uz) {
                transcript = sign_at_common_point({{"U", &com.U}});
                row[14] = transcript.signs[0].second > 0;
                row[15] = transcript.signs[0].second < 0;
            } else {
                row[16] = true;
            }
        } else {
            if (!Uz)
                row[17] = true;
            else {
                row[18] = !Vz;
                row[19] = Vz;
            }
        }
    }

    int matches = 0, which = 0;
    for (int i = 1; i <= 19; ++i)
        if (row[i]) {
            ++matches;
            which = i;
        }
    if (matches != 1)
        throw std::logic_error("Table-1 partition violated: " + std::to_string(matches) +
                               " rows match (mu sign " + std::to_string(mu_sign) + ", D sign " +
                               std::to_string(d_sign) + ")");

    MfClassification out;
    out.set = static_cast<MSet>(which);
    int mf = mset_mf(out.set);
    out.mf = mf < 0 ? "infinite" : std::to_string(mf);
    out.pattern = mset_pattern(out.set);
    out.transcript = std::move(transcript);
    return out;
}

bool center_at_origin(const QuadSystem& sys) {
    if (sys.p00 != 0 || sys.q00 != 0)
        throw std::invalid_argument("center_at_origin: the origin is not a singular point (p00, q00 must be 0)");
    auto t = contraction::tensor_coeffs(sys);
    auto s = center_test_scalars<Rational>(t, Rational(0));
    return center_conditions(
        s, [](const Rational& v) { return v == 0; }, [](const Rational& v) { return sign_of(v); });
}

namespace {

struct Verdict {
    int count = 0;
    std::string rule;
};

Verdict theorem1(const InvariantTable& t) {
    const auto& C = t.C;
    const Rational& mu = t.comitants.mu;
    bool c13 = C[1] == 0 && C[3] == 0;
    if (C[4] == 0 && c13 && C[9] >= 0 && mu > 0) return {2, "Thm1(iii)"};
    if (C[2] * C[4] < 0 && c13 && C[5] == 0) return {1, "Thm1(i)"};
    if (C[4] == 0 && c13 && mu < 0) return {1, "Thm1(ii)"};
    return {0, "Thm1-none"};
}

Verdict theorem2(const InvariantTable& t) {
    const auto& C = t.C;
    const Rational& mu = t.comitants.mu;
    bool c13 = C[1] == 0 && C[3] == 0;
    if (C[4] == 0 && C[12] < 0 && c13 && mu < 0 && C[9] > 0) return {2, "Thm2(iii)"};
    if (C[2] * C[4] < 0 && c13 && C[5] * (C[6] * C[6] + C[7] * C[7]) == 0) return {1, "Thm2(i)"};
    if (C[4] == 0 && C[12] <= 0 && c13 && mu > 0) return {1, "Thm2(ii)"};
    return {0, "Thm2-none"};
}

Verdict theorem3(const InvariantTable& t) {
    const auto& C = t.C;
    const Rational& mu = t.comitants.mu;
    if (C[2] * C[4] < 0 && C[1] == 0 && C[3] == 0 && C[5] == 0) return {1, "Thm3(i)"};
    if (C[4] == 0 && mu > 0 && C[1] == 0 && C[3] == 0 && C[8] == 0) return {1, "Thm3(ii)"};
    return {0, "Thm3-none"};
}

Verdict theorem4(const InvariantTable& t) {
    const auto& C = t.C;
    const Rational& mu = t.comitants.mu;
    if (C[3] == 0 && C[4] == 0) {
        if (C[9] > 0) return {1, "Thm4(i)"};
        if (C[9] == 0 && mu > 0) return {1, "Thm4(ii)"};
    }
    return {0, "Thm4-none"};
}

Verdict theorem5(const InvariantTable& t) {
    const auto& C = t.C;
    if (C[2] * C[4] < 0 && C[1] == 0 && C[3] == 0 && C[5] == 0) return {1, "Thm5(i)"};
    if (C[4] == 0 && C[1] == 0 && C[3] == 0 && C[10] == 0 && C[11] <= 0) return {1, "Thm5(ii)"};
    return {0, "Thm5-none"};
}

Verdict theorem6(const InvariantTable& t) {
    const auto& C = t.C;
    if (C[3] == 0 && C[9] == 0 && C[10] == 0 && C[11] < 0) return {1, "Thm6"};
    return {0, "Thm6-none"};
}

Verdict theorem8(const InvariantTable& t) {
    const auto& C = t.C;
    bool c134 = C[1] == 0 && C[3] == 0 && C[4] == 0;
    if (c134 && C[8] < 0 && C[9] > 0) return {2, "Thm8(iv)"};
    if (C[2] * C[4] < 0 && C[1] == 0 && C[3] == 0 && C[5] == 0) return {1, "Thm8(i)"};
    if (c134 && C[8] > 0) return {1, "Thm8(ii)"};
    if (t.comitants.Stilde.is_zero() && t.K1.is_zero() && t.I1 == 0) return {1, "Thm8(iii)"};
    return {0, "Thm8-none"};
}

Verdict theorem9(const InvariantTable& t) {
    const auto& C = t.C;
    if (!t.comitants.Ntilde.is_zero()) {
        if (C[3] == 0 && C[10] == 0 && C[11] < 0) return {1, "Thm9(i)"};
    } else {
        if (t.J2 == 0 && t.J1 > 0) return {1, "Thm9(ii)"};
    }
    return {0, "Thm9-none"};
}

}  // namespace

ClassificationReport count_centers(const QuadSystem& sys) {
    ComitantSet com = compute_comitants(sys);
    MfClassification mf = classify_mf(com);

    ClassificationReport rep;
    rep.mf = mf.mf;
    rep.pattern = mf.pattern;
    rep.set_index = mf.set;
    rep.transcript = mf.transcript;
    if (!rep.transcript.consistent)
        rep.diagnostics += "sign transcript inconsistent across probe points; verdict uses the first valid point. ";

    switch (mf.set) {
        case MSet::M19: {
            rep.center_count = std::nullopt;
            rep.fired_rule = "M19-degenerate";
            rep.diagnostics += sys.quadratic_part_zero()
                                   ? "degenerate system (zero quadratic part; classification theorems do not apply)"
                                   : "degenerate system";
            return rep;
        }
        case MSet::M3:
            rep.center_count = 0;
            rep.fired_rule = "M3-no-real-points";
            return rep;
        case MSet::M7:
            rep.center_count = 0;
            rep.fired_rule = "M7-no-real-points";
            return rep;
        case MSet::M15:
            rep.center_count = 0;
            rep.fired_rule = "M15-no-real-points";
            return rep;
        case MSet::M18:
            rep.center_count = 0;
            rep.fired_rule = "M18-no-finite-points";
            return rep;
        case MSet::M5:
        case MSet::M6:
        case MSet::M9:
        case MSet::M13:
        case MSet::M16: {
            rep.center_count = 0;
            rep.fired_rule = std::string(mset_name(mf.set)) + "-no-simple-real-point";
            return rep;
        }
        case MSet::M12: {
            rep.center_count = 0;
            rep.fired_rule = "Thm7-no-center";
            return rep;
        }
        default:
            break;
    }

    InvariantTable table = compute_invariants(sys, std::move(com));
    Verdict v;
    switch (mf.set) {
        case MSet::M1: v = theorem1(table); break;
        case MSet::M2: v = theorem2(table); break;
        case MSet::M4: v = theorem3(table); break;
        case MSet::M8: v = theorem4(table); break;
        case MSet::M10: v = theorem5(table); break;
        case MSet::M11: v = theorem6(table); break;
        case MSet::M14: v = theorem8(table); break;
        case MSet::M17: v = theorem9(table); break;
        default: throw std::logic_error("unhandled set in count_centers");
    }
    rep.center_count = v.count;
    rep.fired_rule = v.rule;
    if (v.count == 0 && (table.C[1] != 0 || table.C[3] != 0))
        rep.diagnostics += "Lemma-1 necessary conditions C1 = C3 = 0 fail. ";
    return rep;
}

}  // namespace qcenter
