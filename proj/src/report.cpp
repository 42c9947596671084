#include "qcenter/report.hpp"

#include <json.hpp>

#include <sstream>

namespace qcenter {

using nlohmann::json;

namespace {

json form_to_json(const BinaryForm& f) {
    json coeffs = json::array();
    for (int i = 0; i <= f.degree(); ++i) coeffs.push_back(rational_to_string(f.coeff(i)));
    return json{{"degree", f.degree()}, {"coeffs", coeffs}};
}

json transcript_to_json(const SignTranscript& t) {
    json j;
    j["consistent"] = t.consistent;
    if (t.has_point) {
        j["point"] = json::array({rational_to_string(t.point.first), rational_to_string(t.point.second)});
        json signs = json::object();
        for (const auto& [name, s] : t.signs) signs[name] = s;
        j["signs"] = signs;
        json extra = json::array();
        for (const auto& [x, y] : t.consistency_points)
            extra.push_back(json::array({rational_to_string(x), rational_to_string(y)}));
        j["consistency_points"] = extra;
    }
    if (!t.note.empty()) j["note"] = t.note;
    return j;
}

json invariants_to_json(const InvariantTable& t) {
    json a = json::object(), c = json::object(), i = json::object();
    for (int k = 1; k <= 26; ++k) a["A" + std::to_string(k)] = rational_to_string(t.A[static_cast<size_t>(k)]);
    for (int k = 1; k <= 12; ++k) c["C" + std::to_string(k)] = rational_to_string(t.C[static_cast<size_t>(k)]);
    i["I1"] = rational_to_string(t.I1);
    i["I2"] = rational_to_string(t.I2);
    i["I3"] = rational_to_string(t.I3);
    i["I4"] = rational_to_string(t.I4);
    i["I5"] = rational_to_string(t.I5);
    i["I6"] = rational_to_string(t.I6);
    i["I13"] = rational_to_string(t.I13);
    i["I17"] = rational_to_string(t.I17);
    i["I20"] = rational_to_string(t.I20);

    const ComitantSet& cs = t.comitants;
    json com;
    com["mu"] = rational_to_string(cs.mu);
    com["D"] = rational_to_string(cs.D);
    com["J1"] = rational_to_string(cs.J1);
    com["H"] = form_to_json(cs.H);
    com["G"] = form_to_json(cs.G);
    com["F"] = form_to_json(cs.F);
    com["V"] = form_to_json(cs.V);
    com["S~"] = form_to_json(cs.Stilde);
    com["N~"] = form_to_json(cs.Ntilde);
    com["P"] = form_to_json(cs.P);
    com["R"] = form_to_json(cs.R);
    com["S"] = form_to_json(cs.S);
    com["T"] = form_to_json(cs.T);
    com["U"] = form_to_json(cs.U);

    return json{{"A", a},
                {"C", c},
                {"E1", rational_to_string(t.E1)},
                {"E2", rational_to_string(t.E2)},
                {"I", i},
                {"J1", rational_to_string(t.J1)},
                {"J2", rational_to_string(t.J2)},
                {"K1", form_to_json(t.K1)},
                {"comitants", com}};
}

json oracle_to_json(const OracleVerdict& v) {
    json pts = json::array();
    for (const auto& p : v.points) {
        json jp;
        jp["real"] = p.real;
        jp["multiplicity"] = p.multiplicity;
        jp["kind"] = point_kind_name(p.kind);
        if (p.exact_xy) {
            jp["x"] = rational_to_string(p.exact_xy->first);
            jp["y"] = rational_to_string(p.exact_xy->second);
        } else {
            jp["x_approx"] = p.x;
            jp["y_approx"] = p.y;
            if (!p.real) {
                jp["x_imag"] = p.x_imag;
                jp["y_imag"] = p.y_imag;
            }
        }
        if (p.real) {
            if (p.sigma_exact) jp["sigma"] = rational_to_string(*p.sigma_exact);
            if (p.delta_exact) jp["delta"] = rational_to_string(*p.delta_exact);
            jp["sigma_sign"] = p.sigma_sign;
            jp["delta_sign"] = p.delta_sign;
            if (p.kind == PointKind::CenterCandidate) jp["is_center"] = p.is_center;
            if (p.indeterminate) jp["indeterminate"] = true;
        }
        pts.push_back(jp);
    }
    json j;
    j["mode"] = v.mode == OracleMode::Exact ? "exact" : "numeric";
    j["degenerate"] = v.degenerate;
    j["indeterminate"] = v.indeterminate;
    j["center_count"] = v.center_count;
    j["total_multiplicity"] = v.total_multiplicity;
    if (v.mode == OracleMode::Numeric) j["max_residual"] = v.max_residual;
    if (!v.diagnostics.empty()) j["diagnostics"] = v.diagnostics;
    j["points"] = pts;
    return j;
}

json system_report_to_json(const SystemReport& r) {
    json j;
    j["id"] = r.record.id;
    if (r.parse_error) {
        j["error"] = r.error_message;
        j["line"] = r.input_line;
        return j;
    }
    json coeffs = json::array();
    for (const auto& c : r.record.sys.coeffs()) coeffs.push_back(rational_to_string(c));
    j["coefficients"] = coeffs;
    if (r.record.expected_set || r.record.expected_centers) {
        json e;
        if (r.record.expected_set) e["set_index"] = *r.record.expected_set;
        if (r.record.expected_centers) e["center_count"] = *r.record.expected_centers;
        j["expected"] = e;
    }
    if (r.classification) {
        const auto& c = *r.classification;
        j["set_index"] = mset_name(c.set_index);
        j["m_f"] = c.mf;
        j["pattern"] = c.pattern;
        if (c.center_count)
            j["center_count"] = *c.center_count;
        else
            j["center_count"] = "not-applicable";
        j["fired_rule"] = c.fired_rule;
        j["transcript"] = transcript_to_json(c.transcript);
        if (!c.diagnostics.empty()) j["diagnostics"] = c.diagnostics;
    }
    if (r.invariants) j["invariants"] = invariants_to_json(*r.invariants);
    if (r.oracle) j["oracle"] = oracle_to_json(*r.oracle);
    if (!r.mismatches.empty()) j["mismatches"] = r.mismatches;
    return j;
}

}  // namespace

std::string center_count_string(const std::optional<int>& c) {
    return c ? std::to_string(*c) : "not-applicable";
}

void ReportDocument::add(SystemReport rep) {
    if (rep.parse_error) {
        ++errors;
    } else if (rep.classification) {
        by_set[mset_name(rep.classification->set_index)]++;
        by_center_count[center_count_string(rep.classification->center_count)]++;
        for (const auto& m : rep.mismatches) disagreements.push_back(rep.record.id + ": " + m);
    }
    systems.push_back(std::move(rep));
}

std::string report_to_json(const ReportDocument& doc, bool pretty) {
    json systems = json::array();
    for (const auto& r : doc.systems) systems.push_back(system_report_to_json(r));
    json summary;
    summary["count"] = doc.systems.size();
    summary["by_set"] = doc.by_set;
    summary["by_center_count"] = doc.by_center_count;
    summary["disagreements"] = doc.disagreements;
    summary["errors"] = doc.errors;
    json j{{"schema_version", kSchemaVersion}, {"systems", systems}, {"summary", summary}};
    return pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

std::string report_to_text(const ReportDocument& doc) {
    std::ostringstream out;
    for (const auto& r : doc.systems) {
        if (r.parse_error) {
            out << r.record.id << ": ERROR line " << r.input_line << ": " << r.error_message << "\n";
            continue;
        }
        out << r.record.id << ": ";
        if (r.classification) {
            const auto& c = *r.classification;
            out << mset_name(c.set_index) << "  m_f=" << c.mf << "  pattern=\"" << c.pattern << "\""
                << "  centers=" << center_count_string(c.center_count) << "  rule=" << c.fired_rule;
            if (!c.diagnostics.empty()) out << "  [" << c.diagnostics << "]";
        }
        if (r.oracle) {
            out << "  oracle=";
            if (r.oracle->degenerate)
                out << "degenerate";
            else if (r.oracle->indeterminate)
                out << "indeterminate";
            else
                out << r.oracle->center_count;
        }
        for (const auto& m : r.mismatches) out << "  DISAGREE: " << m;
        out << "\n";
        if (r.invariants) {
            const auto& t = *r.invariants;
            out << "  mu=" << rational_to_string(t.comitants.mu) << " D=" << rational_to_string(t.comitants.D)
                << " J1=" << rational_to_string(t.J1) << " J2=" << rational_to_string(t.J2) << "\n  C:";
            for (int k = 1; k <= 12; ++k)
                out << " C" << k << "=" << rational_to_string(t.C[static_cast<size_t>(k)]);
            out << "\n  I: I1=" << rational_to_string(t.I1) << " I2=" << rational_to_string(t.I2)
                << " I3=" << rational_to_string(t.I3) << " I6=" << rational_to_string(t.I6)
                << " I13=" << rational_to_string(t.I13) << "\n";
        }
        if (r.oracle && !r.oracle->points.empty()) {
            for (const auto& p : r.oracle->points) {
                out << "    point ";
                if (p.exact_xy)
                    out << "(" << rational_to_string(p.exact_xy->first) << ", "
                        << rational_to_string(p.exact_xy->second) << ")";
                else if (p.real)
                    out << "(~" << p.x << ", ~" << p.y << ")";
                else
                    out << "(complex ~" << p.x << (p.x_imag >= 0 ? "+" : "") << p.x_imag << "i)";
                out << " mult=" << p.multiplicity << " kind=" << point_kind_name(p.kind);
                if (p.kind == PointKind::CenterCandidate) out << (p.is_center ? " CENTER" : " focus");
                out << "\n";
            }
        }
    }
    out << "summary: " << doc.systems.size() << " systems";
    if (!doc.by_set.empty()) {
        out << " |";
        for (const auto& [k, v] : doc.by_set) out << " " << k << ":" << v;
    }
    out << " | centers";
    for (const auto& [k, v] : doc.by_center_count) out << " " << k << ":" << v;
    out << " | disagreements " << doc.disagreements.size() << " | errors " << doc.errors << "\n";
    return out.str();
}

bool parse_report_json(const std::string& text, std::string* error) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        if (error) *error = "invalid JSON";
        return false;
    }
    if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion) {
        if (error) *error = "missing or unsupported schema_version";
        return false;
    }
    if (!j.contains("systems") || !j["systems"].is_array() || !j.contains("summary")) {
        if (error) *error = "missing systems/summary";
        return false;
    }
    return true;
}

std::vector<SystemReport> parse_batch_input(const std::string& content, std::string* fatal_error) {
    std::vector<SystemReport> out;
    size_t first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '[') {
        json j = json::parse(content, nullptr, false);
        if (j.is_discarded() || !j.is_array()) {
            if (fatal_error) *fatal_error = "input is not a valid JSON array";
            return out;
        }
        int index = 0;
        for (const auto& item : j) {
            ++index;
            SystemReport rep;
            rep.input_line = index;
            rep.record.id = item.contains("id") && item["id"].is_string() ? item["id"].get<std::string>()
                                                                          : "#" + std::to_string(index);
            if (!item.contains("coefficients") || !item["coefficients"].is_array() ||
                item["coefficients"].size() != 12) {
                rep.parse_error = true;
                rep.error_message = "record " + std::to_string(index) + ": needs a 12-entry coefficients array";
                out.push_back(std::move(rep));
                continue;
            }
            std::array<Rational, 12> c;
            bool ok = true;
            for (size_t i = 0; i < 12; ++i) {
                const auto& e = item["coefficients"][i];
                std::optional<Rational> v;
                if (e.is_string()) v = parse_rational(e.get<std::string>());
                else if (e.is_number_integer()) v = Rational(e.get<long>());
                if (!v) {
                    rep.parse_error = true;
                    rep.error_message =
                        "record " + std::to_string(index) + ": coefficient " + std::to_string(i + 1) + " invalid";
                    ok = false;
                    break;
                }
                c[i] = *v;
            }
            if (!ok) {
                out.push_back(std::move(rep));
                continue;
            }
            rep.record.sys = QuadSystem::from_coeffs(c);
            if (item.contains("expected") && item["expected"].is_object()) {
                const auto& e = item["expected"];
                if (e.contains("set_index") && e["set_index"].is_string())
                    rep.record.expected_set = e["set_index"].get<std::string>();
                if (e.contains("center_count")) {
                    if (e["center_count"].is_string())
                        rep.record.expected_centers = e["center_count"].get<std::string>();
                    else if (e["center_count"].is_number_integer())
                        rep.record.expected_centers = std::to_string(e["center_count"].get<int>());
                }
            }
            out.push_back(std::move(rep));
        }
        return out;
    }

    // Newline-delimited records; '#' starts a comment.
    std::istringstream in(content);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        if (auto pos = trimmed.find('#'); pos != std::string::npos) trimmed = trimmed.substr(0, pos);
        if (trimmed.find_first_not_of(" \t\r") == std::string::npos) continue;
        SystemReport rep;
        rep.input_line = lineno;
        rep.record.id = "line" + std::to_string(lineno);
        std::string err;
        size_t col = 0;
        auto sys = parse_system_record(trimmed, &err, &col);
        if (!sys) {
            rep.parse_error = true;
            rep.error_message = "line " + std::to_string(lineno) + ", column " + std::to_string(col) + ": " + err;
        } else {
            rep.record.sys = *sys;
        }
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace qcenter
