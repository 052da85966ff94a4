#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "thetadft/report.hpp"

using namespace thetadft;
using nlohmann::json;

namespace {

json load_golden(const char* name) {
    std::ifstream in(std::string(TESTS_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

// check `value` against a golden skeleton: strings name required types,
// objects recurse, arrays give the element skeleton
void match_schema(const json& skeleton, const json& value, const std::string& path) {
    if (skeleton.is_string()) {
        const std::string want = skeleton.get<std::string>();
        INFO(path << " should be " << want);
        if (want == "number") REQUIRE(value.is_number());
        else if (want == "string") REQUIRE(value.is_string());
        else if (want == "array") REQUIRE(value.is_array());
        else if (want == "object") REQUIRE(value.is_object());
        return;
    }
    if (skeleton.is_object()) {
        INFO(path);
        REQUIRE(value.is_object());
        for (const auto& [k, v] : skeleton.items()) {
            INFO(path << "." << k << " missing");
            REQUIRE(value.contains(k));
            match_schema(v, value.at(k), path + "." + k);
        }
        return;
    }
    if (skeleton.is_array()) {
        REQUIRE(value.is_array());
        REQUIRE_FALSE(value.empty());
        for (const auto& item : value) match_schema(skeleton.at(0), item, path + "[]");
    }
}

}  // namespace

TEST_CASE("verify --identity NULL passes with a tight residual", "[report]") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.identity_filter = {"NULL"};
    cfg.samples = 50;
    cfg.seed = 42;
    const RunResult res = run(cfg);
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.report.at("results").size() == 1);
    const auto& row = res.report["results"][0];
    REQUIRE(row.at("name") == "NULL");
    REQUIRE(row.at("verdict") == "PASS");
    REQUIRE(row.at("metrics").at("max_rel_residual").get<double>() <= 1e-9);
    REQUIRE(row.at("witnesses").size() == 50);
}

TEST_CASE("JSON report schema matches the golden skeleton", "[report][golden]") {
    RunConfig cfg;
    cfg.command = "all";
    cfg.samples = 3;
    cfg.q_order = 40;
    cfg.identity_filter = {"NULL", "C2"};
    const RunResult res = run(cfg);
    match_schema(load_golden("report_schema.json"), res.report, "report");
}

TEST_CASE("identical configs give byte-identical JSON", "[report][determinism]") {
    RunConfig cfg;
    cfg.command = "all";
    cfg.samples = 5;
    cfg.q_order = 40;
    const RunResult a = run(cfg);
    const RunResult b = run(cfg);
    REQUIRE(a.report.dump() == b.report.dump());
    REQUIRE(a.exit_code == b.exit_code);
    REQUIRE(a.text == b.text);
}

TEST_CASE("spectral --n 4 echoes multiplicities and covers k in {0,1,2}",
          "[report][spectral]") {
    RunConfig cfg;
    cfg.command = "spectral";
    cfg.spectral_n = 4;
    const RunResult res = run(cfg);
    REQUIRE(res.exit_code == 0);
    std::vector<std::string> names;
    for (const auto& row : res.report["results"])
        names.push_back(row.at("name").get<std::string>());
    REQUIRE(names == std::vector<std::string>{"spectral:multiplicity:n=4",
                                              "spectral:eigen:n=4,k=0",
                                              "spectral:eigen:n=4,k=1",
                                              "spectral:eigen:n=4,k=2"});
    const auto& mult = res.report["results"][0];
    REQUIRE(mult.at("metrics").at("counted") == json::array({2, 1, 1, 0}));
    REQUIRE(mult.at("metrics").at("analytic") == json::array({2, 1, 1, 0}));
    for (const auto& row : res.report["results"])
        if (row.at("name").get<std::string>().rfind("spectral:eigen", 0) == 0)
            REQUIRE(row.at("metrics").at("max_residual").get<double>() <= 1e-9);
}

TEST_CASE("qcheck emits the four named verdicts plus the triple product",
          "[report][qcheck]") {
    RunConfig cfg;
    cfg.command = "qcheck";
    cfg.q_order = 50;
    const RunResult res = run(cfg);
    REQUIRE(res.exit_code == 0);
    std::vector<std::string> names;
    for (const auto& row : res.report["results"]) {
        names.push_back(row.at("name").get<std::string>());
        REQUIRE(row.at("verdict") == "PASS");
    }
    REQUIRE(names == std::vector<std::string>{
                         "qcheck:ROGERS_RAMANUJAN", "qcheck:SQUARE", "qcheck:ODD_SQUARE",
                         "qcheck:TRIANGULAR", "qcheck:TRIPLE_PRODUCT"});
}

TEST_CASE("unknown identity names are rejected", "[report][errors]") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.identity_filter = {"NOT_AN_IDENTITY"};
    REQUIRE_THROWS_AS(run(cfg), std::invalid_argument);
}

TEST_CASE("a FAIL verdict yields exit code 2", "[report]") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.identity_filter = {"LDNEVEN6"};
    cfg.samples = 5;
    const RunResult res = run(cfg);
    REQUIRE(res.exit_code == 2);
    REQUIRE(res.report["results"][0].at("verdict") == "FAIL");
}

TEST_CASE("text format prints one line per check", "[report][text]") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.identity_filter = {"NULL", "C2", "P1"};
    cfg.samples = 5;
    const RunResult res = run(cfg);
    std::istringstream is(res.text);
    std::string line;
    int lines = 0;
    while (std::getline(is, line)) {
        ++lines;
        REQUIRE(line.find("PASS") != std::string::npos);
    }
    REQUIRE(lines == 3);
}

TEST_CASE("nu=2 campaign skips section-4 entries in the report", "[report][nu]") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.nu = 2;
    cfg.samples = 5;
    const RunResult res = run(cfg);
    int skipped = 0, passed = 0;
    for (const auto& row : res.report["results"]) {
        const std::string v = row.at("verdict").get<std::string>();
        if (v == "SKIPPED") ++skipped;
        if (v == "PASS") ++passed;
    }
    REQUIRE(passed == 8);   // L1.*, S3.*, N5..N8
    REQUIRE(skipped == 26);
    REQUIRE(res.exit_code == 0);
}
