#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "springer/certificates.hpp"
#include "springer/criterion.hpp"
#include "springer/errors.hpp"
#include "springer/tableau.hpp"

namespace springer {

using ordered_json = nlohmann::ordered_json;

struct SurveyRow {
    TwoColumnShape shape;
    int standard_count = 0;
    int singular_count = 0;
    int nonsingular_count = 0;
};

inline ordered_json shape_to_json(const TwoColumnShape& shape) {
    return ordered_json{{"r", shape.r}, {"s", shape.s}};
}

inline ordered_json report_to_json(const ComponentReport& report) {
    ordered_json pairs = ordered_json::array();
    for (const auto& [i, j] : report.member_switch_pairs)
        pairs.push_back(ordered_json::array({i, j}));
    return ordered_json{{"shape", shape_to_json(report.tableau.shape())},
                        {"tableau", report.tableau.to_literal()},
                        {"fixed_point_count", report.fixed_point_count},
                        {"threshold", report.threshold},
                        {"component_dim", report.component_dim},
                        {"tangent_dim", report.tangent_dim},
                        {"singular", report.singular},
                        {"member_pairs", pairs}};
}

/// Re-ingests an exported report: rebuilds the tableau, re-runs the
/// classification, and demands every recorded field matches the recomputed
/// one. Throws ParseError on malformed JSON, ValidityError on any mismatch.
inline ComponentReport report_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("tableau"))
        throw ParseError("report object needs 'shape' and 'tableau'");
    const auto& js = j.at("shape");
    TwoColumnShape shape = make_shape(js.at("r").get<int>(), js.at("s").get<int>());
    StandardTableau t = parse_standard(shape, j.at("tableau").get<std::string>());
    ComponentReport fresh = classify(t);
    std::set<WindowPair> pairs;
    for (const auto& p : j.at("member_pairs"))
        pairs.insert(WindowPair{p.at(0).get<int>(), p.at(1).get<int>()});
    if (j.at("fixed_point_count").get<int>() != fresh.fixed_point_count ||
        j.at("threshold").get<int>() != fresh.threshold ||
        j.at("component_dim").get<int>() != fresh.component_dim ||
        j.at("tangent_dim").get<int>() != fresh.tangent_dim ||
        j.at("singular").get<bool>() != fresh.singular || pairs != fresh.member_switch_pairs)
        throw ValidityError("re-ingested report disagrees with recomputation for tableau " +
                            t.to_literal());
    return fresh;
}

inline std::string csv_escape(const std::string& field) {
    bool quote = field.find_first_of(",;\"\n") != std::string::npos;
    if (!quote) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string member_pairs_csv(const std::set<WindowPair>& pairs) {
    std::string out;
    for (const auto& [i, j] : pairs) {
        if (!out.empty()) out += ';';
        out += std::to_string(i) + "-" + std::to_string(j);
    }
    return out;
}

inline std::string report_csv_header() {
    return "r,s,tableau,fixed_point_count,threshold,component_dim,tangent_dim,singular,"
           "member_pairs";
}

inline std::string report_to_csv_row(const ComponentReport& report) {
    const TwoColumnShape shape = report.tableau.shape();
    return std::to_string(shape.r) + "," + std::to_string(shape.s) + "," +
           csv_escape(report.tableau.to_literal()) + "," +
           std::to_string(report.fixed_point_count) + "," + std::to_string(report.threshold) +
           "," + std::to_string(report.component_dim) + "," +
           std::to_string(report.tangent_dim) + "," + (report.singular ? "true" : "false") +
           "," + csv_escape(member_pairs_csv(report.member_switch_pairs));
}

inline std::string report_to_text(const ComponentReport& report) {
    std::string out;
    out += "shape: " + to_string(report.tableau.shape()) + "\n";
    out += "tableau: " + report.tableau.to_literal() + "\n";
    out += "fixed_point_count: " + std::to_string(report.fixed_point_count) + "\n";
    out += "threshold: " + std::to_string(report.threshold) + "\n";
    out += "component_dim: " + std::to_string(report.component_dim) + "\n";
    out += "tangent_dim: " + std::to_string(report.tangent_dim) + "\n";
    out += std::string("singular: ") + (report.singular ? "true" : "false") + "\n";
    out += "member_pairs: " + member_pairs_csv(report.member_switch_pairs) + "\n";
    return out;
}

inline ordered_json step_to_json(const MoveStep& step) {
    ordered_json j{{"kind", to_string(step.kind)},
                   {"from", step.from.to_literal()},
                   {"to", step.to.to_literal()},
                   {"switched", ordered_json::array({step.switched.first, step.switched.second})}};
    if (step.paired_switch)
        j["paired_switch"] =
            ordered_json::array({step.paired_switch->first, step.paired_switch->second});
    ordered_json pivot{{"i", step.pivot_i}, {"j", step.pivot_j}};
    auto omega_value = [&](int v) -> ordered_json {
        if (v > step.from.n()) return "inf";
        return v;
    };
    if (step.pivot_i_prime) pivot["i_prime"] = *step.pivot_i_prime;
    if (step.omega_i) pivot["omega_i"] = omega_value(*step.omega_i);
    if (step.omega_i_prime) pivot["omega_i_prime"] = omega_value(*step.omega_i_prime);
    j["pivot"] = pivot;
    return j;
}

inline ordered_json certificate_to_json(const Certificate& cert) {
    ordered_json steps = ordered_json::array();
    for (const auto& step : cert.steps) steps.push_back(step_to_json(step));
    return ordered_json{{"start", cert.start.to_literal()},
                        {"goal", to_string(cert.goal)},
                        {"final", cert.final_tableau().to_literal()},
                        {"steps", steps}};
}

inline std::string certificate_to_text(const Certificate& cert) {
    std::string out = "certificate: " + to_string(cert.goal) + ", " +
                      std::to_string(cert.steps.size()) + " steps\n";
    int k = 0;
    for (const auto& step : cert.steps) {
        out += "  step " + std::to_string(++k) + " [" + to_string(step.kind) + "] switch (" +
               std::to_string(step.switched.first) + "," + std::to_string(step.switched.second) +
               ")";
        if (step.paired_switch)
            out += " paired (" + std::to_string(step.paired_switch->first) + "," +
                   std::to_string(step.paired_switch->second) + ")";
        out += ": " + step.to.to_literal() + "\n";
    }
    return out;
}

inline ordered_json survey_row_to_json(const SurveyRow& row) {
    return ordered_json{{"r", row.shape.r},
                        {"s", row.shape.s},
                        {"standard_count", row.standard_count},
                        {"singular_count", row.singular_count},
                        {"nonsingular_count", row.nonsingular_count}};
}

inline std::string survey_csv_header() {
    return "r,s,standard_count,singular_count,nonsingular_count";
}

inline std::string survey_row_to_csv(const SurveyRow& row) {
    return std::to_string(row.shape.r) + "," + std::to_string(row.shape.s) + "," +
           std::to_string(row.standard_count) + "," + std::to_string(row.singular_count) + "," +
           std::to_string(row.nonsingular_count);
}

} // namespace springer
