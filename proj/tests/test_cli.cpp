#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "springer/cli.hpp"
#include "springer/serialize.hpp"

using namespace springer;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return RunResult{code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("classify renders the report and exits zero") {
    auto res = run_cli({"classify", "--shape", "4,2", "--tableau", "1,3;2,5;4;6"});
    CHECK(res.code == 0);
    CHECK(res.out.find("fixed_point_count: 10") != std::string::npos);
    CHECK(res.out.find("threshold: 6") != std::string::npos);
    CHECK(res.out.find("tangent_dim: 11") != std::string::npos);
    CHECK(res.out.find("component_dim: 7") != std::string::npos);
    CHECK(res.out.find("singular: true") != std::string::npos);

    auto one_column = run_cli({"classify", "--shape", "3,0", "--tableau", "1;2;3"});
    CHECK(one_column.code == 0);
    CHECK(one_column.out.find("fixed_point_count: 3") != std::string::npos);
    CHECK(one_column.out.find("threshold: 3") != std::string::npos);
    CHECK(one_column.out.find("singular: false") != std::string::npos);
}

TEST_CASE("classify JSON round-trips through revalidation") {
    auto res = run_cli({"classify", "--shape", "4,2", "--tableau", "1,3;2,5;4;6", "--format",
                        "json"});
    REQUIRE(res.code == 0);
    ordered_json j = ordered_json::parse(res.out);
    ComponentReport report = report_from_json(j);
    CHECK(report.fixed_point_count == 10);
    CHECK(report.singular);

    // A tampered record no longer re-validates.
    ordered_json bad = j;
    bad["fixed_point_count"] = 9;
    CHECK_THROWS_AS(report_from_json(bad), ValidityError);
}

TEST_CASE("classify rejects bad input with exit code 2 and a named rule") {
    auto nonstandard = run_cli({"classify", "--shape", "4,2", "--tableau", "1,3;2,5;6;4"});
    CHECK(nonstandard.code == 2);
    CHECK(nonstandard.err.find("column") != std::string::npos);

    auto bad_shape = run_cli({"classify", "--shape", "4,5", "--tableau", "1,3;2,5;4;6"});
    CHECK(bad_shape.code == 2);

    auto bad_row = run_cli({"classify", "--shape", "4,2", "--tableau", "3,1;2,5;4;6"});
    CHECK(bad_row.code == 2);
    CHECK(bad_row.err.find("row") != std::string::npos);

    auto malformed = run_cli({"classify", "--shape", "4,2", "--tableau", "1,a;2,5;4;6"});
    CHECK(malformed.code == 2);

    auto missing = run_cli({"classify", "--shape", "4,2"});
    CHECK(missing.code == 2);

    auto unknown = run_cli({"frobnicate"});
    CHECK(unknown.code == 2);
}

TEST_CASE("membership reports verdicts, witnesses, and certificates") {
    auto member = run_cli({"membership", "--shape", "4,2", "--t", "1,3;2,5;4;6", "--tprime",
                           "1,5;2,6;3;4"});
    CHECK(member.code == 0);
    CHECK(member.out.find("member: true") != std::string::npos);

    auto chain = run_cli({"membership", "--shape", "4,2", "--t", "1,3;2,5;4;6", "--tprime",
                          "1,5;2,6;3;4", "--certificate"});
    CHECK(chain.code == 0);
    CHECK(chain.out.find("certificate: reached_column_content") != std::string::npos);
    CHECK(chain.out.find("step 1") != std::string::npos);

    auto chain_json = run_cli({"membership", "--shape", "4,2", "--t", "1,3;2,5;4;6", "--tprime",
                               "1,5;2,6;3;4", "--certificate", "--format", "json"});
    REQUIRE(chain_json.code == 0);
    ordered_json cj = ordered_json::parse(chain_json.out);
    REQUIRE(cj.contains("certificate"));
    CHECK(cj.at("certificate").at("goal") == "reached_column_content");
    CHECK(cj.at("certificate").at("start") == "1,5;2,6;3;4");
    for (const auto& step : cj.at("certificate").at("steps")) {
        CHECK(step.contains("kind"));
        CHECK(step.at("switched").size() == 2);
        CHECK(step.at("pivot").contains("i"));
    }

    // Window (1,6) holds both rows of the probe but only one row of the
    // component representative, so the verdict is negative with that witness.
    auto non = run_cli({"membership", "--shape", "4,2", "--t", "1,2;3,4;5;6", "--tprime",
                        "4,5;2,6;3;1", "--format", "json"});
    CHECK(non.code == 0);
    ordered_json j = ordered_json::parse(non.out);
    REQUIRE_FALSE(j.at("member").get<bool>());
    CHECK(j.at("witness") == ordered_json::array({1, 6}));
    CHECK(j.at("witness_count").get<int>() == 2);
    CHECK(j.at("witness_bound").get<int>() == 1);
    CHECK(j.at("witness_count").get<int>() > j.at("witness_bound").get<int>());
}

TEST_CASE("enumerate lists verdicts for one shape") {
    auto res = run_cli({"enumerate", "--shape", "4,2"});
    CHECK(res.code == 0);
    CHECK(res.out.find("9 standard") != std::string::npos);
    CHECK(res.out.find("1,3;2,5;4;6: singular") != std::string::npos);

    auto hook = run_cli({"enumerate", "--shape", "5,1", "--format", "json"});
    REQUIRE(hook.code == 0);
    ordered_json j = ordered_json::parse(hook.out);
    CHECK(j.at("singular_count").get<int>() == 0);
    CHECK(j.at("standard_count").get<int>() == 5);

    auto single = run_cli({"enumerate", "--shape", "1,0", "--format", "csv"});
    CHECK(single.code == 0);
    CHECK(single.out == "r,s,standard_count,singular_count,nonsingular_count\n1,0,1,0,1\n");
}

TEST_CASE("survey rows are ordered by boxes then first column and balance") {
    auto res = run_cli({"survey", "--max-n", "6", "--format", "json"});
    REQUIRE(res.code == 0);
    ordered_json rows = ordered_json::parse(res.out);
    REQUIRE(rows.is_array());
    int prev_n = -1, prev_r = -1;
    for (const auto& row : rows) {
        int r = row.at("r").get<int>();
        int s = row.at("s").get<int>();
        int n = r + s;
        CHECK((n > prev_n || (n == prev_n && r > prev_r)));
        prev_n = n;
        prev_r = r;
        CHECK(row.at("singular_count").get<int>() + row.at("nonsingular_count").get<int>() ==
              row.at("standard_count").get<int>());
        if (s <= 1) CHECK(row.at("singular_count").get<int>() == 0);
    }

    // Parallel sweeps give byte-identical output.
    auto again = run_cli({"survey", "--max-n", "6", "--format", "json", "--jobs", "4"});
    CHECK(again.out == res.out);
}

TEST_CASE("verify passes at small sizes and honors the fault hook") {
    auto ok = run_cli({"verify", "--max-n", "3", "--seeds", "1,2"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("[FAIL]") == std::string::npos);
    CHECK(ok.out.find("checks passed") != std::string::npos);

    auto trivial = run_cli({"verify", "--max-n", "1"});
    CHECK(trivial.code == 0);

    auto faulty = run_cli({"verify", "--max-n", "3", "--seeds", "1", "--inject-fault"});
    CHECK(faulty.code == 1);
    CHECK(faulty.out.find("[FAIL] rank of u on V_j/V_i equals the window count") !=
          std::string::npos);
}

TEST_CASE("verify seed configuration: flag beats environment beats default") {
    setenv("SPRINGER2COL_SEEDS", "5,6", 1);
    auto from_env = run_cli({"verify", "--max-n", "2", "--format", "json"});
    REQUIRE(from_env.code == 0);
    ordered_json env_json = ordered_json::parse(from_env.out);
    CHECK(env_json.at("seeds") == ordered_json::array({5, 6}));
    CHECK(env_json.at("passed").get<bool>());
    CHECK(env_json.at("checks").size() == 17);
    for (const auto& check : env_json.at("checks")) CHECK(check.at("passed").get<bool>());

    auto from_flag = run_cli({"verify", "--max-n", "2", "--seeds", "9", "--format", "json"});
    REQUIRE(from_flag.code == 0);
    CHECK(ordered_json::parse(from_flag.out).at("seeds") == ordered_json::array({9}));
    unsetenv("SPRINGER2COL_SEEDS");

    auto defaulted = run_cli({"verify", "--max-n", "2", "--format", "json"});
    REQUIRE(defaulted.code == 0);
    CHECK(ordered_json::parse(defaulted.out).at("seeds") == ordered_json::array({1, 2, 3}));

    auto bad = run_cli({"verify", "--max-n", "2", "--seeds", "1,x"});
    CHECK(bad.code == 2);
}

TEST_CASE("export writes JSON datasets that re-validate record by record") {
    const std::string path = "/tmp/springer_export_test.json";
    auto res = run_cli({"export", "--shape", "4,2", "--format", "json", "--output", path});
    REQUIRE(res.code == 0);
    ordered_json data = ordered_json::parse(slurp(path));
    REQUIRE(data.is_array());
    CHECK(data.size() == 9);
    for (const auto& record : data) {
        ComponentReport report = report_from_json(record);
        CHECK(report.tableau.shape() == TwoColumnShape{4, 2});
    }

    auto repeat = run_cli({"export", "--shape", "4,2", "--format", "json", "--output", path,
                           "--jobs", "3"});
    REQUIRE(repeat.code == 0);
    CHECK(ordered_json::parse(slurp(path)) == data);
    std::remove(path.c_str());
}

TEST_CASE("export writes CSV with a header and quotes literal fields") {
    const std::string path = "/tmp/springer_export_test.csv";
    auto res = run_cli({"export", "--shape", "1,0", "--format", "csv", "--output", path});
    REQUIRE(res.code == 0);
    std::string text = slurp(path);
    CHECK(text ==
          "r,s,tableau,fixed_point_count,threshold,component_dim,tangent_dim,singular,"
          "member_pairs\n1,0,1,0,0,0,0,false,\n");

    auto multi = run_cli({"export", "--shape", "4,2", "--format", "csv", "--output", path});
    REQUIRE(multi.code == 0);
    std::string body = slurp(path);
    CHECK(std::count(body.begin(), body.end(), '\n') == 10); // header + 9 records
    CHECK(body.find("\"1,3;2,5;4;6\"") != std::string::npos);
    std::remove(path.c_str());

    auto missing_out = run_cli({"export", "--shape", "4,2", "--format", "csv"});
    CHECK(missing_out.code == 2);

    auto no_range = run_cli({"export", "--format", "json", "--output", path});
    CHECK(no_range.code == 2);

    auto bad_path = run_cli({"export", "--shape", "1,0", "--format", "json", "--output",
                             "/nonexistent-dir/x.json"});
    CHECK(bad_path.code == 2);
    CHECK(bad_path.err.find("/nonexistent-dir/x.json") != std::string::npos);
}

TEST_CASE("export over a shape range contains every standard tableau once") {
    const std::string path = "/tmp/springer_export_range.json";
    auto res = run_cli({"export", "--max-n", "3", "--format", "json", "--output", path});
    REQUIRE(res.code == 0);
    ordered_json data = ordered_json::parse(slurp(path));
    CHECK(data.size() == 7); // shapes (0,0),(1,0),(1,1),(2,0),(2,1),(3,0)
    std::remove(path.c_str());
}

TEST_CASE("help is reachable and classify writes to files") {
    auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("classify") != std::string::npos);

    const std::string path = "/tmp/springer_classify_out.txt";
    auto res = run_cli({"classify", "--shape", "4,2", "--tableau", "1,3;2,5;4;6", "--output",
                        path});
    REQUIRE(res.code == 0);
    CHECK(res.out.empty());
    CHECK(slurp(path).find("fixed_point_count: 10") != std::string::npos);
    std::remove(path.c_str());
}
