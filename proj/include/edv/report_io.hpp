#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "edv/verify_indices.hpp"

namespace edv {

inline nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json failures = nlohmann::json::array();
    for (const Failure& f : report.failures)
        failures.push_back({{"tree", f.tree}, {"expected", f.expected}, {"observed", f.observed}});
    return nlohmann::json{{"claim_id", report.claim_id},
                          {"universe", report.universe},
                          {"checked", report.checked},
                          {"passed", report.passed},
                          {"failures", failures},
                          {"notes", report.notes},
                          {"runtime_seconds", report.runtime_seconds}};
}

inline std::string to_text(const VerificationReport& report) {
    char runtime[32];
    std::snprintf(runtime, sizeof runtime, "%.3f", report.runtime_seconds);
    std::string out = report.claim_id + ": " + (report.ok() ? "PASS" : "FAIL") + " (" +
                      std::to_string(report.passed) + "/" + std::to_string(report.checked) +
                      " checks, " + runtime + "s)\n";
    out += "  universe: " + report.universe + "\n";
    for (const std::string& note : report.notes) out += "  note: " + note + "\n";
    for (const Failure& f : report.failures)
        out += "  FAIL " + f.tree + "\n    expected: " + f.expected + "\n    observed: " + f.observed +
               "\n";
    return out;
}

inline std::string to_csv(const VerificationReport& report) {
    return "claim_id,checked,passed,failures\n" + report.claim_id + "," +
           std::to_string(report.checked) + "," + std::to_string(report.passed) + "," +
           std::to_string(report.failures.size()) + "\n";
}

inline std::string table4_csv(const Table4Result& result) {
    std::string out = "n,k,w_min,w_max\n";
    for (const Table4Cell& c : result.cells)
        out += std::to_string(c.n) + "," + std::to_string(c.k) + "," + std::to_string(c.min_edge) +
               "," + std::to_string(c.max_edge) + "\n";
    return out;
}

inline std::string table4_text(const Table4Result& result) {
    std::string out = "(n,k)    W_min  W_max   agreement\n";
    for (const Table4Cell& c : result.cells) {
        char line[96];
        std::snprintf(line, sizeof line, "(%2d,%2d)  %5lld  %5lld   %s\n", c.n, c.k,
                      static_cast<long long>(c.min_edge), static_cast<long long>(c.max_edge),
                      c.ok ? "ok" : "MISMATCH");
        out += line;
    }
    out += result.report.ok() ? "all 28 cells agree three ways\n" : "TABLE MISMATCH\n";
    return out;
}

inline nlohmann::json table4_json(const Table4Result& result) {
    nlohmann::json cells = nlohmann::json::array();
    for (const Table4Cell& c : result.cells)
        cells.push_back({{"n", c.n},
                         {"k", c.k},
                         {"w_min", {{"expected", c.expected_min},
                                    {"edge_additive", c.min_edge},
                                    {"pairwise", c.min_brute},
                                    {"closed_form", c.min_closed}}},
                         {"w_max", {{"expected", c.expected_max},
                                    {"edge_additive", c.max_edge},
                                    {"pairwise", c.max_brute},
                                    {"closed_form", c.max_closed}}},
                         {"ok", c.ok}});
    return nlohmann::json{{"cells", cells}, {"report", to_json(result.report)}};
}

}  // namespace edv
