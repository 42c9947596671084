#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcenter/classifier.hpp"
#include "qcenter/invariants.hpp"
#include "qcenter/oracle.hpp"
#include "qcenter/quad_system.hpp"

namespace qcenter {

constexpr int kSchemaVersion = 1;

struct SystemRecord {
    std::string id;
    QuadSystem sys;
    std::optional<std::string> expected_set;
    std::optional<std::string> expected_centers;  // "0", "1", "2", "not-applicable"
};

struct SystemReport {
    SystemRecord record;
    bool parse_error = false;
    std::string error_message;
    int input_line = 0;
    std::optional<ClassificationReport> classification;
    std::optional<InvariantTable> invariants;
    std::optional<OracleVerdict> oracle;
    std::vector<std::string> mismatches;  // oracle/classifier or expectation mismatches
};

struct ReportDocument {
    std::vector<SystemReport> systems;
    std::map<std::string, int> by_set;
    std::map<std::string, int> by_center_count;
    std::vector<std::string> disagreements;
    int errors = 0;

    void add(SystemReport rep);
    bool clean() const { return errors == 0 && disagreements.empty(); }
};

std::string center_count_string(const std::optional<int>& c);

std::string report_to_json(const ReportDocument& doc, bool pretty = true);
std::string report_to_text(const ReportDocument& doc);

// Strict parser for the JSON this tool prints (round-trip check support).
// Returns false with a message on schema violations.
bool parse_report_json(const std::string& text, std::string* error);

// Batch input: newline-delimited coefficient records or a JSON array of
// {id, coefficients, expected} objects.
std::vector<SystemReport> parse_batch_input(const std::string& content, std::string* fatal_error);

}  // namespace qcenter
