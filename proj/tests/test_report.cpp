#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qwz/report.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

using namespace qwz;
using nlohmann::json;

namespace {

int cli(const std::vector<std::string>& args, std::string* text = nullptr) {
    std::ostringstream out;
    int code = run_cli(args, out);
    if (text != nullptr)
        *text = out.str();
    return code;
}

// drop run-dependent fields so two runs of the same config compare equal
std::string scrub(const std::string& payload) {
    std::string s =
        std::regex_replace(payload, std::regex("\"timestamp\": \"[^\"]*\""),
                           "\"timestamp\": \"T\"");
    s = std::regex_replace(s, std::regex("\"elapsed_ms\": [0-9.e+-]+"),
                           "\"elapsed_ms\": 0");
    s = std::regex_replace(s, std::regex("\\[[0-9.]+ ms\\]"), "[ms]");
    s = std::regex_replace(
        s, std::regex("\\(\\d{4}-\\d{2}-\\d{2}T[0-9:]+Z\\)"), "(T)");
    return s;
}

Report sample_report() {
    Report report;
    report.version = tool_version();
    report.timestamp = "2026-01-01T00:00:00Z";
    report.config = {{"command", "unit"}, {"precision", "30"}};
    report.checks ={{"alpha", "p=1", "pass", "ok", 1.5},
                    {"beta", "p=2", "fail", "bad value", 0.25}};
    return report;
}

} // namespace

TEST_CASE("json emission is stable and well formed") {
    Report report = sample_report();
    std::string first = emit(report, ReportFormat::json);
    std::string second = emit(report, ReportFormat::json);
    CHECK(first == second);

    json doc = json::parse(first);
    CHECK(doc.at("schema") == 1);
    CHECK(doc.at("version") == tool_version());
    CHECK(doc.at("timestamp") == "2026-01-01T00:00:00Z");
    CHECK(doc.at("config").at("command") == "unit");
    REQUIRE(doc.at("checks").size() == 2);
    CHECK(doc["checks"][0]["name"] == "alpha");
    CHECK(doc["checks"][0]["status"] == "pass");
    CHECK(doc["checks"][1]["witness"] == "bad value");
    CHECK(doc["checks"][1]["elapsed_ms"].get<double>() ==
          doctest::Approx(0.25));
}

TEST_CASE("empty report emits an empty check array") {
    Report report;
    report.version = tool_version();
    report.timestamp = "2026-01-01T00:00:00Z";
    json doc = json::parse(emit(report, ReportFormat::json));
    CHECK(doc.at("schema") == 1);
    CHECK(doc.at("checks").is_array());
    CHECK(doc.at("checks").empty());
    CHECK(exit_code(report) == 0);
}

TEST_CASE("text format summarizes and caps long witnesses") {
    Report report = sample_report();
    report.checks[1].witness = std::string(400, 'x');
    std::string text = emit(report, ReportFormat::text);
    CHECK(text.find("summary: 2 checks, 1 pass, 1 fail, 0 error") !=
          std::string::npos);
    CHECK(text.find(std::string(320, 'x') + "... (+80 chars)") !=
          std::string::npos);
    CHECK(text.find(std::string(321, 'x')) == std::string::npos);

    // the json payload keeps the full witness
    json doc = json::parse(emit(report, ReportFormat::json));
    CHECK(doc["checks"][1]["witness"].get<std::string>().size() == 400);
}

TEST_CASE("exit code ranks error over fail over pass") {
    Report report = sample_report();
    CHECK(exit_code(report) == 1);
    report.checks[1].status = "pass";
    CHECK(exit_code(report) == 0);
    report.checks[0].status = "error";
    CHECK(exit_code(report) == 2);
}

TEST_CASE("cli passes a small residual grid with exit 0") {
    std::string text;
    int code = cli({"wz", "check", "--pair", "guo", "--nmax", "3", "--kmax",
                    "3"},
                   &text);
    CHECK(code == 0);
    CHECK(text.find("summary: 16 checks, 16 pass, 0 fail, 0 error") !=
          std::string::npos);
}

TEST_CASE("cli negative controls fail with exit 1") {
    std::string text;
    CHECK(cli({"wz", "check", "--pair", "guo", "--nmax", "2", "--kmax", "2",
               "--corrupt"},
              &text) == 1);
    CHECK(text.find("fail") != std::string::npos);

    CHECK(cli({"identity", "verify", "--id", "rama1-q", "--q", "1/3",
               "--terms", "25", "--corrupt"},
              &text) == 1);
    CHECK(text.find("fail  identity-residual") != std::string::npos);
}

TEST_CASE("cli reports runtime domain errors with exit 2") {
    std::string text;
    CHECK(cli({"identity", "limit", "--id", "gz-thm44-input"}, &text) == 2);
    CHECK(text.find("error") != std::string::npos);
    CHECK(text.find("no classical companion") != std::string::npos);
}

TEST_CASE("cli usage errors exit with 64") {
    CHECK(cli({}) == 64);
    CHECK(cli({"frobnicate"}) == 64);
    CHECK(cli({"wz", "check", "--no-such-flag"}) == 64);
    CHECK(cli({"wz", "check", "--pair", "nonexistent"}) == 64);
    CHECK(cli({"wz", "transform", "--pair", "guo", "--transform", "p9"}) ==
          64);
    CHECK(cli({"identity", "verify", "--id", "no-such-id"}) == 64);
    CHECK(cli({"identity", "verify", "--id", "rama1-q", "--q", "5/3"}) == 64);
    CHECK(cli({"identity", "verify", "--id", "rama1-q", "--q", "1/2",
               "--precision", "5"}) == 64);
    CHECK(cli({"identity", "verify", "--id", "rama-level1"}) == 64);
    CHECK(cli({"identity", "classical", "--id", "rama1-q"}) == 64);
    CHECK(cli({"identity", "verify", "--id", "rama1-q", "--a", "q+1"}) == 64);
    CHECK(cli({"congruence", "qtheorem", "--which", "1", "--m", "4"}) == 64);
    CHECK(cli({"congruence", "qtheorem", "--which", "2", "--m", "9"}) == 64);
    CHECK(cli({"congruence", "super", "--which", "1", "--p", "9"}) == 64);
    CHECK(cli({"congruence", "asub", "--id", "rama1-q"}) == 64);
    CHECK(cli({"congruence", "cyclo", "--m", "4"}) == 64);
    CHECK(cli({"report"}) == 64);

    std::string text;
    CHECK(cli({"wz", "check", "--pair", "nonexistent"}, &text) == 64);
    CHECK(text.find("usage error") != std::string::npos);
}

TEST_CASE("help returns 0") {
    std::string text;
    CHECK(cli({"--help"}, &text) == 0);
    CHECK(text.find("wz") != std::string::npos);
    CHECK(text.find("congruence") != std::string::npos);
}

TEST_CASE("json runs are deterministic modulo timestamp and timing") {
    std::vector<std::string> args = {"congruence", "super",    "--which",
                                     "2",          "--format", "json"};
    std::string first, second;
    CHECK(cli(args, &first) == 0);
    CHECK(cli(args, &second) == 0);
    CHECK(scrub(first) == scrub(second));

    json doc = json::parse(first);
    CHECK(doc["checks"].size() == 8); // four primes, two truncations each
    for (const json& check : doc["checks"])
        CHECK(check["status"] == "pass");
}

TEST_CASE("worker pool preserves check order") {
    std::vector<std::string> base = {"congruence", "asub"};
    std::string serial, pooled;
    CHECK(cli(base, &serial) == 0);
    std::vector<std::string> with_jobs = base;
    with_jobs.push_back("--jobs");
    with_jobs.push_back("4");
    CHECK(cli(with_jobs, &pooled) == 0);
    std::string serial_scrubbed = scrub(serial);
    std::string pooled_scrubbed = scrub(pooled);
    // jobs appears in the echoed config; normalize it before comparing
    serial_scrubbed =
        std::regex_replace(serial_scrubbed, std::regex("jobs = 1"), "jobs");
    pooled_scrubbed =
        std::regex_replace(pooled_scrubbed, std::regex("jobs = 4"), "jobs");
    CHECK(serial_scrubbed == pooled_scrubbed);
    CHECK(serial.find("terminating-evaluation") != std::string::npos);
}

TEST_CASE("qtheorem example produces two truncation rows per m") {
    std::string text;
    int code = cli({"congruence", "qtheorem", "--which", "1", "--m", "3,5",
                    "--format", "json"},
                   &text);
    CHECK(code == 1); // claimed modulus fails; weakened one holds
    json doc = json::parse(text);
    REQUIRE(doc["checks"].size() == 4);
    CHECK(doc["checks"][0]["params"] == "m=3 upper=1");
    CHECK(doc["checks"][1]["params"] == "m=3 upper=2");
    CHECK(doc["checks"][2]["params"] == "m=5 upper=2");
    CHECK(doc["checks"][3]["params"] == "m=5 upper=4");
    for (const json& check : doc["checks"]) {
        CHECK(check["status"] == "fail");
        std::string witness = check["witness"].get<std::string>();
        CHECK(witness.find("Phi-multiplicity 1") != std::string::npos);
        CHECK(witness.find("weakened modulus holds") != std::string::npos);
    }
}

TEST_CASE("QWZ_PRECISION env var sets the default precision") {
    setenv("QWZ_PRECISION", "45", 1);
    std::string text;
    CHECK(cli({"identity", "verify", "--id", "rama1-q", "--q", "1/3",
               "--terms", "30"},
              &text) == 0);
    CHECK(text.find("precision = 45") != std::string::npos);

    setenv("QWZ_PRECISION", "4", 1);
    CHECK(cli({"identity", "verify", "--id", "rama1-q", "--q", "1/3"},
              &text) == 64);

    setenv("QWZ_PRECISION", "not-a-number", 1);
    CHECK(cli({"identity", "verify", "--id", "rama1-q", "--q", "1/3"},
              &text) == 64);

    unsetenv("QWZ_PRECISION");
    CHECK(cli({"identity", "verify", "--id", "rama1-q", "--q", "1/3",
               "--terms", "30"},
              &text) == 0);
    CHECK(text.find("precision = 30") != std::string::npos);
}

TEST_CASE("out option writes the payload to a file") {
    std::string path = "test_report_out.json";
    std::string text;
    int code = cli({"identity", "verify", "--id", "rama1-q", "--q", "0",
                    "--terms", "1", "--format", "json", "--out", path},
                   &text);
    CHECK(code == 0);
    CHECK(text.find("wrote " + path) != std::string::npos);
    std::ifstream file(path);
    REQUIRE(file.good());
    json doc = json::parse(file);
    CHECK(doc["checks"][0]["status"] == "pass");
    std::remove(path.c_str());

    CHECK(cli({"identity", "verify", "--id", "rama1-q", "--q", "0",
               "--terms", "1", "--out", "no/such/dir/x.json"},
              &text) == 2);
}
