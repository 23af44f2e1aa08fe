#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "springer/certificates.hpp"
#include "springer/criterion.hpp"
#include "springer/errors.hpp"
#include "springer/parallel.hpp"
#include "springer/serialize.hpp"
#include "springer/shape.hpp"
#include "springer/tableau.hpp"
#include "springer/verify.hpp"

namespace springer::cli {

// Exit codes: 0 success, 1 verification/internal failure, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

namespace detail {

inline TwoColumnShape parse_shape_flag(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError("shape must be given as r,s (got '" + text + "')");
    int r = springer::detail::parse_entry(std::string_view(text).substr(0, comma));
    int s = springer::detail::parse_entry(std::string_view(text).substr(comma + 1));
    return make_shape(r, s);
}

inline std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    for (auto token : springer::detail::split(text, ',')) {
        token = springer::detail::trim(token);
        if (token.empty()) throw ParseError("empty seed in list '" + text + "'");
        std::uint64_t value = 0;
        for (char c : token) {
            if (c < '0' || c > '9')
                throw ParseError("seeds must be naturals, got '" + std::string(token) + "'");
            value = value * 10 + static_cast<std::uint64_t>(c - '0');
        }
        seeds.push_back(value);
    }
    if (seeds.empty()) throw ParseError("seed list is empty");
    return seeds;
}

inline void write_output(const std::string& content, const std::string& path,
                         std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ValidityError("cannot open output file: " + path);
    file << content;
    if (!file) throw ValidityError("write failed for output file: " + path);
}

inline std::vector<ComponentReport> classify_sweep(const TwoColumnShape& shape, int jobs) {
    auto tableaux = enumerate_standard(shape);
    std::vector<std::optional<ComponentReport>> slots(tableaux.size());
    parallel_for(static_cast<int>(tableaux.size()), jobs, [&](int idx) {
        slots[static_cast<size_t>(idx)] = classify(tableaux[static_cast<size_t>(idx)]);
    });
    std::vector<ComponentReport> reports;
    reports.reserve(tableaux.size());
    for (auto& slot : slots) reports.push_back(std::move(*slot));
    return reports;
}

inline SurveyRow survey_row(const TwoColumnShape& shape, int jobs) {
    SurveyRow row{shape, 0, 0, 0};
    for (const auto& report : classify_sweep(shape, jobs)) {
        ++row.standard_count;
        if (report.singular) ++row.singular_count;
        else ++row.nonsingular_count;
    }
    return row;
}

} // namespace detail

struct Options {
    std::string shape_text;
    std::string tableau_text;
    std::string t_text;
    std::string tprime_text;
    std::string format = "text";
    std::string output_path;
    std::string seeds_text;
    bool certificate = false;
    bool inject_fault = false;
    int max_n = 0;
    int jobs = default_parallelism();
};

inline int cmd_classify(const Options& opt, std::ostream& out) {
    TwoColumnShape shape = detail::parse_shape_flag(opt.shape_text);
    StandardTableau t = parse_standard(shape, opt.tableau_text);
    ComponentReport report = classify(t);
    std::string rendered;
    if (opt.format == "json") rendered = report_to_json(report).dump(2) + "\n";
    else if (opt.format == "csv")
        rendered = report_csv_header() + "\n" + report_to_csv_row(report) + "\n";
    else rendered = report_to_text(report);
    detail::write_output(rendered, opt.output_path, out);
    return kExitOk;
}

inline int cmd_membership(const Options& opt, std::ostream& out) {
    TwoColumnShape shape = detail::parse_shape_flag(opt.shape_text);
    StandardTableau t = parse_standard(shape, opt.t_text);
    RowStandardTableau tp = parse_row_standard(shape, opt.tprime_text);
    MembershipVerdict verdict = is_member(t, tp);
    std::optional<Certificate> cert;
    if (opt.certificate && verdict.member) cert = membership_chain(t, tp);

    std::string rendered;
    if (opt.format == "json") {
        ordered_json j{{"shape", shape_to_json(shape)},
                       {"t", t.to_literal()},
                       {"tprime", tp.to_literal()},
                       {"member", verdict.member}};
        if (verdict.witness) {
            auto [wi, wj] = *verdict.witness;
            j["witness"] = ordered_json::array({wi, wj});
            j["witness_count"] = s_table_of_rowstandard(tp).value(wi, wj);
            j["witness_bound"] = s_table_of_component(t).value(wi, wj);
        }
        if (cert) j["certificate"] = certificate_to_json(*cert);
        rendered = j.dump(2) + "\n";
    } else {
        rendered = std::string("member: ") + (verdict.member ? "true" : "false") + "\n";
        if (verdict.witness) {
            auto [wi, wj] = *verdict.witness;
            rendered += "witness: window (" + std::to_string(wi) + "," + std::to_string(wj) +
                        ") has count " +
                        std::to_string(s_table_of_rowstandard(tp).value(wi, wj)) +
                        " above bound " +
                        std::to_string(s_table_of_component(t).value(wi, wj)) + "\n";
        }
        if (cert) rendered += certificate_to_text(*cert);
    }
    detail::write_output(rendered, opt.output_path, out);
    return kExitOk;
}

inline int cmd_enumerate(const Options& opt, std::ostream& out) {
    TwoColumnShape shape = detail::parse_shape_flag(opt.shape_text);
    auto reports = detail::classify_sweep(shape, opt.jobs);
    SurveyRow row{shape, static_cast<int>(reports.size()), 0, 0};
    for (const auto& r : reports) (r.singular ? row.singular_count : row.nonsingular_count)++;

    std::string rendered;
    if (opt.format == "json") {
        ordered_json tableaux = ordered_json::array();
        for (const auto& r : reports)
            tableaux.push_back(ordered_json{{"tableau", r.tableau.to_literal()},
                                            {"singular", r.singular}});
        ordered_json j = survey_row_to_json(row);
        j["tableaux"] = tableaux;
        rendered = j.dump(2) + "\n";
    } else if (opt.format == "csv") {
        rendered = survey_csv_header() + "\n" + survey_row_to_csv(row) + "\n";
    } else {
        for (const auto& r : reports)
            rendered += r.tableau.to_literal() + std::string(": ") +
                        (r.singular ? "singular" : "nonsingular") + "\n";
        rendered += "shape " + to_string(shape) + ": " + std::to_string(row.standard_count) +
                    " standard, " + std::to_string(row.singular_count) + " singular, " +
                    std::to_string(row.nonsingular_count) + " nonsingular\n";
    }
    detail::write_output(rendered, opt.output_path, out);
    return kExitOk;
}

inline int cmd_survey(const Options& opt, std::ostream& out) {
    if (opt.max_n < 1) throw ValidityError("--max-n must be at least 1");
    std::vector<SurveyRow> rows;
    for (const auto& shape : shapes_up_to(opt.max_n))
        rows.push_back(detail::survey_row(shape, opt.jobs));

    std::string rendered;
    if (opt.format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& row : rows) j.push_back(survey_row_to_json(row));
        rendered = j.dump(2) + "\n";
    } else if (opt.format == "csv") {
        rendered = survey_csv_header() + "\n";
        for (const auto& row : rows) rendered += survey_row_to_csv(row) + "\n";
    } else {
        rendered = "r\ts\tstandard\tsingular\tnonsingular\n";
        for (const auto& row : rows)
            rendered += std::to_string(row.shape.r) + "\t" + std::to_string(row.shape.s) + "\t" +
                        std::to_string(row.standard_count) + "\t" +
                        std::to_string(row.singular_count) + "\t" +
                        std::to_string(row.nonsingular_count) + "\n";
    }
    detail::write_output(rendered, opt.output_path, out);
    return kExitOk;
}

inline int cmd_verify(const Options& opt, std::ostream& out) {
    VerifyConfig cfg;
    if (opt.max_n > 0) cfg.max_n = opt.max_n;
    cfg.parallelism = opt.jobs;
    cfg.inject_fault = opt.inject_fault;
    if (!opt.seeds_text.empty()) {
        cfg.seeds = detail::parse_seed_list(opt.seeds_text);
    } else if (const char* env = std::getenv("SPRINGER2COL_SEEDS")) {
        cfg.seeds = detail::parse_seed_list(env);
    }
    auto results = run_verification(cfg);

    std::string rendered;
    if (opt.format == "json") {
        ordered_json checks = ordered_json::array();
        for (const auto& r : results) {
            ordered_json notes = ordered_json::array();
            for (const auto& note : r.notes) notes.push_back(note);
            checks.push_back(ordered_json{{"name", r.name},
                                          {"passed", r.passed},
                                          {"detail", r.detail},
                                          {"notes", notes}});
        }
        rendered = ordered_json{{"max_n", cfg.max_n},
                                {"seeds", cfg.seeds},
                                {"checks", checks},
                                {"passed", all_passed(results)}}
                       .dump(2) +
                   "\n";
    } else {
        int passed = 0;
        for (const auto& r : results) {
            if (r.passed) {
                ++passed;
                rendered += "[PASS] " + r.name + " (" + r.detail + ")\n";
            } else {
                rendered += "[FAIL] " + r.name + ": " + r.detail + "\n";
            }
            for (const auto& note : r.notes) rendered += "       note: " + note + "\n";
        }
        rendered += std::to_string(passed) + "/" + std::to_string(results.size()) +
                    " checks passed (max_n=" + std::to_string(cfg.max_n) + ", " +
                    std::to_string(cfg.seeds.size()) + " seeds)\n";
    }
    detail::write_output(rendered, opt.output_path, out);
    return all_passed(results) ? kExitOk : kExitVerifyFailed;
}

inline int cmd_export(const Options& opt, std::ostream& out) {
    if (opt.output_path.empty()) throw ValidityError("export needs --output");
    std::vector<TwoColumnShape> shapes;
    if (!opt.shape_text.empty()) shapes.push_back(detail::parse_shape_flag(opt.shape_text));
    else if (opt.max_n > 0) shapes = shapes_up_to(opt.max_n);
    else throw ValidityError("export needs --shape or --max-n");

    std::vector<ComponentReport> reports;
    for (const auto& shape : shapes)
        for (auto& report : detail::classify_sweep(shape, opt.jobs))
            reports.push_back(std::move(report));

    std::string rendered;
    if (opt.format == "csv") {
        rendered = report_csv_header() + "\n";
        for (const auto& r : reports) rendered += report_to_csv_row(r) + "\n";
    } else {
        ordered_json j = ordered_json::array();
        for (const auto& r : reports) j.push_back(report_to_json(r));
        rendered = j.dump(2) + "\n";
    }
    detail::write_output(rendered, opt.output_path, out);
    return kExitOk;
}

/// Parses and dispatches one invocation. Arguments exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Singularity classification for two-column Springer fiber components"};
    app.name("springer2col");

    auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember(allowed))
            ->capture_default_str();
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", opt.output_path, "write the result to this file");
    };

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify one component given by a standard tableau");
    classify_cmd->add_option("--shape", opt.shape_text, "column lengths r,s")->required();
    classify_cmd->add_option("--tableau", opt.tableau_text, "standard tableau literal")
        ->required();
    add_format(classify_cmd, {"text", "json", "csv"});
    add_common(classify_cmd);

    CLI::App* membership_cmd = app.add_subcommand(
        "membership", "test whether a row-standard tableau's flag lies in a component");
    membership_cmd->add_option("--shape", opt.shape_text, "column lengths r,s")->required();
    membership_cmd->add_option("--t", opt.t_text, "standard tableau literal")->required();
    membership_cmd->add_option("--tprime", opt.tprime_text, "row-standard tableau literal")
        ->required();
    membership_cmd->add_flag("--certificate", opt.certificate,
                             "print the switch chain (members) or the witness window");
    add_format(membership_cmd, {"text", "json"});
    add_common(membership_cmd);

    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "classify every standard tableau of one shape");
    enumerate_cmd->add_option("--shape", opt.shape_text, "column lengths r,s")->required();
    enumerate_cmd->add_option("--jobs", opt.jobs, "worker threads")->capture_default_str();
    add_format(enumerate_cmd, {"text", "json", "csv"});
    add_common(enumerate_cmd);

    CLI::App* survey_cmd =
        app.add_subcommand("survey", "per-shape singularity counts over all shapes up to max-n");
    survey_cmd->add_option("--max-n", opt.max_n, "largest box count")
        ->required()
        ->check(CLI::PositiveNumber);
    survey_cmd->add_option("--jobs", opt.jobs, "worker threads")->capture_default_str();
    add_format(survey_cmd, {"text", "json", "csv"});
    add_common(survey_cmd);

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run every formula cross-check against the exact linear-algebra oracle");
    verify_cmd->add_option("--max-n", opt.max_n, "largest box count (default 7)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seeds", opt.seeds_text,
                           "comma-separated seeds (default SPRINGER2COL_SEEDS or 1,2,3)");
    verify_cmd->add_option("--jobs", opt.jobs, "worker threads")->capture_default_str();
    verify_cmd->add_flag("--inject-fault", opt.inject_fault)->group("");
    add_format(verify_cmd, {"text", "json"});
    add_common(verify_cmd);

    CLI::App* export_cmd =
        app.add_subcommand("export", "write a classification dataset to a file");
    export_cmd->add_option("--shape", opt.shape_text, "column lengths r,s");
    export_cmd->add_option("--max-n", opt.max_n, "export all shapes with at most this many boxes")
        ->check(CLI::PositiveNumber);
    export_cmd->add_option("--jobs", opt.jobs, "worker threads")->capture_default_str();
    add_format(export_cmd, {"json", "csv"});
    export_cmd->add_option("--output", opt.output_path, "output file path")->required();

    app.require_subcommand(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(opt, out);
        if (membership_cmd->parsed()) return cmd_membership(opt, out);
        if (enumerate_cmd->parsed()) return cmd_enumerate(opt, out);
        if (survey_cmd->parsed()) return cmd_survey(opt, out);
        if (verify_cmd->parsed()) return cmd_verify(opt, out);
        if (export_cmd->parsed()) return cmd_export(opt, out);
    } catch (const ShapeError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ValidityError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const IndexError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    err << "no subcommand given\n";
    return kExitInputError;
}

} // namespace springer::cli
