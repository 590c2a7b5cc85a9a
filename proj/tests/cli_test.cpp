// End-to-end tests that spawn the real binary (path injected by the build
// as BZETA_CLI_PATH) and inspect stdout plus exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(BZETA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe))
        out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("bern json round-trips with identical values per index") {
    auto res = run_cli("bern --max 10 --formula all --format json");
    REQUIRE(res.exit_code == 0);
    const auto doc = nlohmann::json::parse(res.out);
    REQUIRE(doc.is_array());
    // 4 formulas x 10 rows + oracle rows 0..10
    CHECK(doc.size() == 51);

    std::map<int, std::set<std::string>> values_by_index;
    std::map<int, std::set<std::string>> methods_by_index;
    for (const auto& row : doc) {
        REQUIRE(row.contains("index"));
        REQUIRE(row.contains("value"));
        REQUIRE(row.contains("method"));
        values_by_index[row["index"].get<int>()].insert(row["value"].get<std::string>());
        methods_by_index[row["index"].get<int>()].insert(row["method"].get<std::string>());
    }
    for (const auto& [index, values] : values_by_index)
        CHECK(values.size() == 1);  // all methods agree at every index
    CHECK(values_by_index.at(2) == std::set<std::string>{"1/6"});
    CHECK(values_by_index.at(1) == std::set<std::string>{"-1/2"});
    CHECK(values_by_index.at(4) == std::set<std::string>{"-1/30"});
    CHECK(methods_by_index.at(5) ==
          std::set<std::string>{"eq1", "eq2", "eq3", "eq4", "oracle"});
    CHECK(methods_by_index.at(11) == std::set<std::string>{"eq1", "eq2"});
    CHECK(methods_by_index.at(0) == std::set<std::string>{"oracle"});
}

TEST_CASE("bern plain and csv formats") {
    auto plain = run_cli("bern --max 2 --formula eq1 --format plain");
    CHECK(plain.exit_code == 0);
    CHECK(contains(plain.out, "B_2 [eq1] = 1/6"));
    CHECK(contains(plain.out, "B_3 [eq1] = 0"));

    auto csv = run_cli("bern --max 2 --formula eq3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(contains(csv.out, "index,value,method\n"));
    CHECK(contains(csv.out, "1,-1/2,eq3\n"));
    CHECK(contains(csv.out, "2,1/6,eq3\n"));
}

TEST_CASE("tables output") {
    auto csv = run_cli("tables --kind eulerian --max-row 4 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(contains(csv.out, "row,index,value\n"));
    CHECK(contains(csv.out, "4,1,11\n"));
    CHECK(contains(csv.out, "3,1,4\n"));

    auto json = run_cli("tables --kind stirling --max-row 5 --format json");
    CHECK(json.exit_code == 0);
    const auto doc = nlohmann::json::parse(json.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 5);
    CHECK(doc[3] == nlohmann::json({"1", "7", "6", "1"}));      // S(4, 1..4)
    CHECK(doc[4] == nlohmann::json({"1", "15", "25", "10", "1"}));  // S(5, 1..5)
}

TEST_CASE("polylog output format") {
    auto res = run_cli("polylog --order 2 --form both --eval 1/2");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "stirling: (-x + x^2)/(1+x)^3"));
    CHECK(contains(res.out, "eulerian: (-x + x^2)/(1+x)^3"));
    CHECK(contains(res.out, "value at x = 1/2: -2/27"));

    auto only = run_cli("polylog --order 3 --form eulerian");
    CHECK(only.exit_code == 0);
    CHECK(contains(only.out, "eulerian: (-x + 4 x^2 - x^3)/(1+x)^4"));
    CHECK_FALSE(contains(only.out, "stirling"));
}

TEST_CASE("verify subcommand") {
    auto res = run_cli("verify --max-r 12");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "all checks passed"));
    CHECK_FALSE(contains(res.out, "[FAIL]"));
}

TEST_CASE("quadcheck plain and json") {
    auto res = run_cli("quadcheck --eq 6 --tol 1e-10");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "EQ6"));
    CHECK(contains(res.out, "all 1 case(s) pass"));

    auto json = run_cli("quadcheck --eq 10 --max-r 3 --format json");
    CHECK(json.exit_code == 0);
    const auto doc = nlohmann::json::parse(json.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 3);
    for (const auto& rep : doc) {
        CHECK(rep["identity"] == "EQ10");
        CHECK(rep["pass"] == true);
        CHECK(rep["converged"] == true);
        CHECK(rep["abs_err"].is_number());
        CHECK(rep["evaluations"].is_number_integer());
        CHECK(rep["exact_target"].is_string());
    }
    CHECK(doc[0]["exact_target"] == "-1/2");
    CHECK(doc[0]["float_factor"] == 1.0);

    auto with_n = run_cli("quadcheck --eq 11 --max-r 0 --n 1/2 --format json");
    CHECK(with_n.exit_code == 0);
    const auto ndoc = nlohmann::json::parse(with_n.out);
    REQUIRE(ndoc.size() == 1);
    CHECK(ndoc[0]["identity"] == "EQ11");
    CHECK(ndoc[0]["n"] == "1/2");
}

TEST_CASE("bench reports verified timings") {
    auto res = run_cli("bench --max-r 12 --reps 1");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "table build"));
    for (const char* m : {"eq1", "eq2", "eq3", "eq4", "oracle"})
        CHECK(contains(res.out, m));
    CHECK(contains(res.out, "verified against oracle"));
}

TEST_CASE("exit codes: usage errors are 2") {
    CHECK(run_cli("").exit_code == 2);                                // subcommand required
    CHECK(run_cli("frobnicate").exit_code == 2);                      // unknown subcommand
    CHECK(run_cli("bern --max 0").exit_code == 2);                    // bad range
    CHECK(run_cli("bern --bogus 1").exit_code == 2);                  // unknown flag
    CHECK(run_cli("bern --formula eq9").exit_code == 2);              // bad member
    CHECK(run_cli("tables --max-row 3").exit_code == 2);              // missing --kind
    CHECK(run_cli("polylog --order 0 --form eulerian").exit_code == 2);
    CHECK(run_cli("polylog --order 1 --eval 1/0").exit_code == 2);    // malformed rational
    CHECK(run_cli("polylog --order 1 --eval -1").exit_code == 2);     // pole
    CHECK(run_cli("verify --max-r 0").exit_code == 2);
    CHECK(run_cli("quadcheck --eq 10 --n 1/2").exit_code == 2);       // --n is EQ11-only
    CHECK(run_cli("quadcheck --eq 11 --n 2/3x").exit_code == 2);
    CHECK(run_cli("quadcheck --eq 11 --n 5/4").exit_code == 2);       // n outside (0,1)
    CHECK(run_cli("quadcheck --tol 0").exit_code == 2);
    CHECK(run_cli("bench --reps 0").exit_code == 2);
}

TEST_CASE("exit codes: verification failure is 1, help is 0") {
    // an unreachable tolerance forces a failing quadrature report
    auto res = run_cli("quadcheck --eq 6 --tol 1e-30");
    CHECK(res.exit_code == 1);
    CHECK(contains(res.out, "FAILED"));

    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("bern --help").exit_code == 0);
    CHECK(run_cli("quadcheck --help").exit_code == 0);
}
