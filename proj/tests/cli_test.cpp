#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"
#include "wdvvkit/cli.hpp"

using nlohmann::json;
using wdvvkit::cli::RunResult;
using wdvvkit::cli::run;

static std::string fixture(const std::string& name) {
    return std::string(WDVVKIT_FIXTURES) + "/" + name;
}

static const json& clause(const json& report, const std::string& name) {
    for (const json& c : report.at("clauses"))
        if (c.at("name") == name) return c;
    static json missing;
    FAIL("missing clause ", name);
    return missing;
}

TEST_CASE("kontsevich emits the pinned table") {
    RunResult r = run({"kontsevich", "-k", "4"});
    CHECK(r.exit_code == 0);
    CHECK(r.report.at("status") == "pass");
    json want = json::array({json::array({1, 1}), json::array({2, 1}), json::array({3, 12}),
                             json::array({4, 620})});
    CHECK(r.report.at("N") == want);
    CHECK(r.report.at("pde_residual_zero") == true);
}

TEST_CASE("kontsevich cross-checks the two derivations on request") {
    RunResult r = run({"kontsevich", "-k", "10", "--check-pde"});
    CHECK(r.exit_code == 0);
    CHECK(clause(r.report, "oracle_agreement").at("ok") == true);
    // N_10 exceeds exact double range, so it is a decimal string
    CHECK(r.report.at("N").back().at(1) == "40739017561997799680");
    CHECK(r.report.at("N").at(7).at(1) == 13525751027392LL);
}

TEST_CASE("kontsevich rejects a non-positive order") {
    RunResult r = run({"kontsevich", "-k", "0"});
    CHECK(r.exit_code == 2);
    CHECK(r.report.at("status") == "error");
}

TEST_CASE("check-wdvv passes the quadratic solution") {
    RunResult r = run({"check-wdvv", "--input", fixture("quad.json")});
    CHECK(r.exit_code == 0);
    CHECK(r.report.at("status") == "pass");
    CHECK(clause(r.report, "residuals_zero").at("ok") == true);
    CHECK(r.report.at("ordinary") == true);
    CHECK(r.report.at("inputs_echo").at("F") == "1/2*x1^2*x3 + 1/2*x1*x2^2");
}

TEST_CASE("ordinary mode adds the constancy clause") {
    RunResult r = run({"check-wdvv", "--input", fixture("quad.json"), "--mode", "ordinary"});
    CHECK(r.exit_code == 0);
    CHECK(clause(r.report, "ordinary").at("ok") == true);
}

TEST_CASE("check-wdvv fails the perturbed solution with a witness") {
    RunResult r = run({"check-wdvv", "--input", fixture("perturbed.json")});
    CHECK(r.exit_code == 1);
    CHECK(r.report.at("status") == "fail");
    const json& c = clause(r.report, "residuals_zero");
    CHECK(c.at("ok") == false);
    CHECK(c.contains("witness"));
}

TEST_CASE("malformed documents are input errors") {
    RunResult r = run({"check-wdvv", "--input", fixture("malformed.json")});
    CHECK(r.exit_code == 2);
    CHECK(r.report.at("status") == "error");
    CHECK(r.report.contains("error"));
}

TEST_CASE("a missing file is an input error") {
    RunResult r = run({"check-wdvv", "--input", fixture("no_such_file.json")});
    CHECK(r.exit_code == 2);
    CHECK(r.report.at("status") == "error");
}

TEST_CASE("the pivot flag overrides the document") {
    // the document pivot passes; pivot 2 has a singular slice, so an explicit
    // flag must surface as an error
    RunResult r = run({"check-wdvv", "--input", fixture("quad.json"), "--pivot", "2"});
    CHECK(r.exit_code == 2);
    CHECK(r.report.at("status") == "error");
}

TEST_CASE("check-lenard passes the quadratic square with every clause") {
    RunResult r = run({"check-lenard", "--input", fixture("lenard_quad.json")});
    CHECK(r.exit_code == 0);
    for (const char* name : {"chain_commutes", "chain_independent", "correlations_symmetric",
                             "haantjes_zero", "operators_commute", "theta_chain_closed",
                             "theta_square_closed", "unity"})
        CHECK(clause(r.report, name).at("ok") == true);
    CHECK(r.report.at("clauses").size() == 8);
}

TEST_CASE("check-frobenius passes the derived and the raw documents") {
    for (const char* f : {"frobenius_from_F.json", "frobenius_raw.json"}) {
        RunResult r = run({"check-frobenius", "--input", fixture(f)});
        CHECK(r.exit_code == 0);
        for (const char* name :
             {"flat", "compatible", "unity", "cov_const_e", "potential", "associative"})
            CHECK(clause(r.report, name).at("ok") == true);
    }
}

TEST_CASE("broken structure constants fail as a verdict, never an error") {
    RunResult r = run({"check-frobenius", "--input", fixture("frobenius_broken.json")});
    CHECK(r.exit_code == 1);
    CHECK(r.report.at("status") == "fail");
    const json& c = clause(r.report, "compatible");
    CHECK(c.at("ok") == false);
    CHECK(c.contains("witness"));
}

TEST_CASE("haantjes vanishes on the corpus operators and a diagonal example") {
    for (const char* f : {"haantjes_quad.json", "haantjes_k.json"}) {
        RunResult r = run({"haantjes", "--input", fixture(f)});
        CHECK(r.exit_code == 0);
        CHECK(clause(r.report, "haantjes_zero").at("ok") == true);
    }
}

TEST_CASE("unknown flags produce usage text on stderr and nothing on stdout") {
    RunResult r = run({"check-wdvv", "--input", "x.json", "--bogus"});
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(r.report.is_null());
}

TEST_CASE("help goes to stdout with exit zero") {
    RunResult r = run({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Usage") != std::string::npos);
    CHECK(r.err.empty());

    RunResult sub = run({"kontsevich", "--help"});
    CHECK(sub.exit_code == 0);
    CHECK(sub.out.find("--check-pde") != std::string::npos);
}

TEST_CASE("a missing subcommand is a usage error") {
    RunResult r = run({});
    CHECK(r.exit_code == 2);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("reports are byte-identical across runs, timing aside") {
    RunResult a = run({"check-lenard", "--input", fixture("lenard_quad.json")});
    RunResult b = run({"check-lenard", "--input", fixture("lenard_quad.json")});
    json ja = a.report, jb = b.report;
    ja.erase("timing_ms");
    jb.erase("timing_ms");
    CHECK(ja.dump() == jb.dump());
}

static int run_subprocess(const std::string& cmdline, std::string& output) {
    FILE* pipe = popen((cmdline + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    output.clear();
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
    int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_CASE("the installed binary behaves like the in-process entry point") {
    std::string out;
    int code = run_subprocess(std::string(WDVVKIT_CLI_PATH) + " kontsevich -k 4", out);
    CHECK(code == 0);
    CHECK(out.find("\"status\": \"pass\"") != std::string::npos);

    code = run_subprocess(std::string(WDVVKIT_CLI_PATH) + " kontsevich --bogus", out);
    CHECK(code == 2);
    CHECK(out.empty());

    code = run_subprocess(
        std::string(WDVVKIT_CLI_PATH) + " check-wdvv --input " + fixture("perturbed.json"), out);
    CHECK(code == 1);
}
